use std::fmt;

use serde_json::{json, Value};

use weakorder::dyer::{dyer_join, dyer_leq, dyer_meet, dyer_normal_form, enumerate_biclosed_fin, DyerElement};
use weakorder::lab::{check_lattice, tito_quotient, tot_quotient, weak_order_sn_lattice, FiniteLattice, FinitePoset};
use weakorder::render::{render_arcs_circle, render_arcs_line, render_hasse_dot, render_hasse_svg};
use weakorder::sn::{
    self, all_permutations, canonical_join_rep_sn, congruence_classes, join_irreducible_from_arc, join_sn, leq_sn,
    lower_arcs_sn, lower_walls_sn, meet_sn, permutation_from_inversions, permutation_from_noncrossing, upper_arcs_sn,
    upper_walls_sn, ArcIdeal, Permutation,
};
use weakorder::tito::{
    canonical_join_rep_tito, encode, flip_tito, join_of_cyclic_collection, join_tito, leq_tito, lower_walls_tito,
    lower_wrapped_arcs, meet_tito, parse_windows, ReflectionIndex, Tito, WrappedArc,
};
use weakorder::total::{
    canonical_join_rep_tot, inversions_json, join_of_noncrossing_tot, join_tot, lower_arcs_tot, lower_walls_tot,
    meet_tot, TotalOrder,
};
use weakorder::{Arc, Error};

use crate::{Action, Command, Format, Mode};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Domain(Error::Parse(_)) => 2,
            Failure::Domain(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn unsupported(group: &str, c: &Command) -> Failure {
    usage(format!("`{group}` has no action {:?}", c.action))
}

fn format_of(c: &Command, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = c.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(format!("{:?} output is not available for {:?}", f, c.action)))
    }
}

fn arity(c: &Command, k: usize) -> Result<(), Failure> {
    if c.args.len() == k {
        Ok(())
    } else {
        Err(usage(format!("{:?} takes {k} argument(s), got {}", c.action, c.args.len())))
    }
}

fn need_n(c: &Command) -> Result<usize, Failure> {
    match c.n {
        Some(0) => Err(usage("--n must be positive")),
        Some(n) => Ok(n),
        None => Err(usage("this action needs --n")),
    }
}

fn json_text(v: Value) -> String {
    serde_json::to_string_pretty(&v).unwrap()
}

fn arc_json(a: &Arc) -> Value {
    json!([a.a, a.b, a.left, a.right])
}

fn arcs_text(arcs: &[Arc]) -> String {
    arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn wrapped_text(arcs: &[WrappedArc]) -> String {
    arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn wrapped_json(arcs: &[WrappedArc]) -> Value {
    Value::Array(arcs.iter().map(|w| arc_json(&w.arc)).collect())
}

fn parse_pair(s: &str) -> Result<(i64, i64), Failure> {
    let body = s.trim().trim_start_matches(['(', '<']).trim_end_matches([')', '>']);
    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            _ => Err(Error::Parse(format!("expected a pair a,b, got {s:?}")).into()),
        },
        _ => Err(Error::Parse(format!("expected a pair a,b, got {s:?}")).into()),
    }
}

fn parse_int(s: &str) -> Result<i64, Failure> {
    s.trim().parse().map_err(|_| Error::Parse(format!("expected an integer, got {s:?}")).into())
}

fn lattice_out(lat: &FiniteLattice, f: Format) -> String {
    let p = &lat.poset;
    match f {
        Format::Json => json_text(p.to_json()),
        Format::Dot => render_hasse_dot(p),
        Format::Svg => render_hasse_svg(p),
        Format::Text => {
            let covers = p.cover_pairs();
            let mut lines = vec![format!("{} elements, {} covers", p.len(), covers.len())];
            for (x, y) in covers {
                lines.push(format!("{} < {}", p.labels()[x], p.labels()[y]));
            }
            lines.join("\n")
        }
    }
}

const LATTICE_FORMATS: [Format; 4] = [Format::Text, Format::Json, Format::Dot, Format::Svg];

// ---- symmetric group ----

fn perms(c: &Command) -> Result<(usize, Vec<Permutation>), Failure> {
    let ps = c.args.iter().map(|s| s.parse::<Permutation>()).collect::<Result<Vec<_>, _>>()?;
    let n = match (ps.first(), c.n) {
        (Some(p), _) => p.n(),
        (None, Some(n)) => n,
        (None, None) => return Err(usage("give permutations or --n")),
    };
    if let Some(p) = ps.iter().find(|p| p.n() != n) {
        return Err(Error::MixedSizes(n, p.n()).into());
    }
    Ok((n, ps))
}

fn perm_out(p: &Permutation, f: Format) -> String {
    match f {
        Format::Json => json_text(json!({ "permutation": p.to_string(), "inversions": p.inversions().pairs })),
        _ => p.to_string(),
    }
}

pub fn sn(c: &Command) -> Out {
    let plain = [Format::Text, Format::Json];
    match c.action {
        Action::Join | Action::Meet => {
            let f = format_of(c, Format::Text, &plain)?;
            let (n, ps) = perms(c)?;
            let sets: Vec<_> = ps.iter().map(Permutation::inversions).collect();
            let set = if c.action == Action::Join { join_sn(n, &sets)? } else { meet_sn(n, &sets)? };
            Ok(perm_out(&permutation_from_inversions(&set)?, f))
        }
        Action::Leq => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 2)?;
            let (_, ps) = perms(c)?;
            let v = leq_sn(&ps[0], &ps[1])?;
            Ok(if f == Format::Json { json_text(json!(v)) } else { v.to_string() })
        }
        Action::Walls => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 1)?;
            let (_, ps) = perms(c)?;
            let (lower, upper) = (lower_walls_sn(&ps[0]), upper_walls_sn(&ps[0]));
            Ok(match f {
                Format::Json => json_text(json!({ "lower": lower, "upper": upper })),
                _ => {
                    let show = |w: &[(usize, usize)]| {
                        w.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ")
                    };
                    format!("lower: {}\nupper: {}", show(&lower), show(&upper))
                }
            })
        }
        Action::Arcs => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json, Format::Svg])?;
            arity(c, 1)?;
            let (n, ps) = perms(c)?;
            let (lower, upper) = (lower_arcs_sn(&ps[0]), upper_arcs_sn(&ps[0]));
            Ok(match f {
                Format::Svg => render_arcs_line(&lower, Some((1, n as i64))),
                Format::Json => json_text(json!({
                    "lower": lower.iter().map(arc_json).collect::<Vec<_>>(),
                    "upper": upper.iter().map(arc_json).collect::<Vec<_>>(),
                })),
                _ => format!("lower: {}\nupper: {}", arcs_text(&lower), arcs_text(&upper)),
            })
        }
        Action::Cjr => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json, Format::Svg])?;
            arity(c, 1)?;
            let (n, ps) = perms(c)?;
            let arcs = canonical_join_rep_sn(&ps[0]);
            let jis = arcs.iter().map(|a| join_irreducible_from_arc(a, n)).collect::<Result<Vec<_>, _>>()?;
            Ok(match f {
                Format::Svg => render_arcs_line(&arcs, Some((1, n as i64))),
                Format::Json => json_text(Value::Array(
                    arcs.iter()
                        .zip(&jis)
                        .map(|(a, j)| json!({ "arc": arc_json(a), "joinand": j.to_string() }))
                        .collect(),
                )),
                _ => arcs.iter().zip(&jis).map(|(a, j)| format!("{a} {j}")).collect::<Vec<_>>().join("\n"),
            })
        }
        Action::Flip => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 2)?;
            let p: Permutation = c.args[0].parse()?;
            let (a, b) = parse_pair(&c.args[1])?;
            let (a, b) = (a.min(b), a.max(b));
            let in_range = a >= 1 && b as usize <= p.n();
            let w = (a as usize, b as usize);
            if !in_range || !(lower_walls_sn(&p).contains(&w) || upper_walls_sn(&p).contains(&w)) {
                return Err(Error::NotAWall(format!("({a},{b}) is not a wall of {p}")).into());
            }
            Ok(perm_out(&p.left_transpose(w.0, w.1), f))
        }
        Action::Check => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json, Format::Svg])?;
            let n = need_n(c)?;
            let arcs = c.args.iter().map(|s| s.parse::<Arc>()).collect::<Result<Vec<_>, _>>()?;
            let p = permutation_from_noncrossing(&arcs, n)?;
            Ok(if f == Format::Svg { render_arcs_line(&arcs, Some((1, n as i64))) } else { perm_out(&p, f) })
        }
        Action::Enumerate => {
            let f = format_of(c, Format::Text, &LATTICE_FORMATS)?;
            arity(c, 0)?;
            let n = need_n(c)?;
            if n > 6 {
                return Err(Error::TooLarge(format!("S_{n} has too many elements to list")).into());
            }
            Ok(match f {
                Format::Text => all_permutations(n).iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n"),
                _ => lattice_out(&weak_order_sn_lattice(n), f),
            })
        }
        Action::Quotient => {
            let f = format_of(c, Format::Text, &LATTICE_FORMATS)?;
            let n = need_n(c)?;
            if n > 6 {
                return Err(Error::TooLarge(format!("S_{n} has too many elements to list")).into());
            }
            let arcs = c.args.iter().map(|s| s.parse::<Arc>()).collect::<Result<Vec<_>, _>>()?;
            let classes = congruence_classes(&ArcIdeal::new(n, arcs)?)?;
            if f == Format::Text {
                return Ok(classes
                    .iter()
                    .map(|(bottom, members)| {
                        let m: Vec<String> = members.iter().map(|p| p.to_string()).collect();
                        format!("{bottom}: {}", m.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n"));
            }
            let bottoms: Vec<&Permutation> = classes.keys().collect();
            let labels = bottoms.iter().map(|p| p.to_string()).collect();
            let poset = FinitePoset::from_fn(labels, |i, j| leq_sn(bottoms[i], bottoms[j]).unwrap())?;
            Ok(lattice_out(&check_lattice(poset)?, f))
        }
        Action::Normalize => {
            let f = format_of(c, Format::Text, &plain)?;
            let n = need_n(c)?;
            let pairs = c.args.iter().map(|s| parse_pair(s)).collect::<Result<Vec<_>, _>>()?;
            let mut set = Vec::new();
            for (a, b) in pairs {
                if a < 1 || b < 1 {
                    return Err(Error::OutOfRange(format!("({a},{b}) outside 1..{n}")).into());
                }
                set.push((a as usize, b as usize));
            }
            let set = sn::InversionSet::new(n, set)?;
            Ok(perm_out(&permutation_from_inversions(&set)?, f))
        }
    }
}

// ---- total orders ----

fn orders(c: &Command) -> Result<Vec<TotalOrder>, Failure> {
    Ok(c.args.iter().map(|s| s.parse::<TotalOrder>()).collect::<Result<Vec<_>, _>>()?)
}

fn order_out(t: &TotalOrder, f: Format) -> String {
    match f {
        Format::Json => json_text(json!({ "order": t.to_string(), "inversions": inversions_json(t) })),
        _ => t.to_string(),
    }
}

fn order_range(arcs: &[Arc], t: &TotalOrder) -> Option<(i64, i64)> {
    t.window().or_else(|| arcs.first().map(|a| (a.a, a.b)))
}

pub fn tot(c: &Command) -> Out {
    let plain = [Format::Text, Format::Json];
    match c.action {
        Action::Join | Action::Meet => {
            let f = format_of(c, Format::Text, &plain)?;
            let ts = orders(c)?;
            let t = if c.action == Action::Join { join_tot(&ts) } else { meet_tot(&ts)? };
            Ok(order_out(&t, f))
        }
        Action::Leq => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 2)?;
            let ts = orders(c)?;
            let v = ts[0].leq(&ts[1]);
            Ok(if f == Format::Json { json_text(json!(v)) } else { v.to_string() })
        }
        Action::Normalize => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 1)?;
            Ok(order_out(&orders(c)?[0], f))
        }
        Action::Walls => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 1)?;
            let walls = lower_walls_tot(&orders(c)?[0]);
            Ok(match f {
                Format::Json => json_text(json!(walls)),
                _ => walls.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" "),
            })
        }
        Action::Arcs | Action::Cjr => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json, Format::Svg])?;
            arity(c, 1)?;
            let t = &orders(c)?[0];
            let arcs = if c.action == Action::Arcs { lower_arcs_tot(t) } else { canonical_join_rep_tot(t) };
            Ok(match f {
                Format::Svg => render_arcs_line(&arcs, order_range(&arcs, t)),
                Format::Json => json_text(Value::Array(arcs.iter().map(arc_json).collect())),
                _ => arcs_text(&arcs),
            })
        }
        Action::Flip => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 2)?;
            let t = &orders(c)?[0];
            let (a, b) = parse_pair(&c.args[1])?;
            let (a, b) = (a.min(b), a.max(b));
            let y = t.left_transpose(a, b);
            // A wall separates two orders whose inversion sets differ by one pair.
            let diff = t.inversions().symmetric_difference(y.inversions()).count();
            if a == b || diff != 1 {
                return Err(Error::NotAWall(format!("({a},{b}) is not a wall of {t}")).into());
            }
            Ok(order_out(&y, f))
        }
        Action::Check => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json, Format::Svg])?;
            let arcs = c.args.iter().map(|s| s.parse::<Arc>()).collect::<Result<Vec<_>, _>>()?;
            let t = join_of_noncrossing_tot(&arcs)?;
            Ok(if f == Format::Svg { render_arcs_line(&arcs, order_range(&arcs, &t)) } else { order_out(&t, f) })
        }
        Action::Quotient => {
            let f = format_of(c, Format::Text, &LATTICE_FORMATS)?;
            arity(c, 2)?;
            let lat = tot_quotient(parse_int(&c.args[0])?, parse_int(&c.args[1])?)?;
            Ok(lattice_out(&lat, f))
        }
        Action::Enumerate => Err(unsupported("tot", c)),
    }
}

// ---- TITOs ----

fn titos(c: &Command, n: usize) -> Result<Vec<Tito>, Failure> {
    Ok(c.args.iter().map(|s| parse_windows(s, n)).collect::<Result<Vec<_>, _>>()?)
}

fn tito_out(t: &Tito, f: Format) -> String {
    match f {
        Format::Json => json_text(json!({ "windows": t.to_string(), "widely_generated": t.is_widely_generated() })),
        _ => t.to_string(),
    }
}

fn wrapped_svg(c: &Command, arcs: &[WrappedArc], n: usize) -> String {
    match c.mode {
        Mode::Circle => render_arcs_circle(arcs, n),
        Mode::Line => {
            let plain: Vec<Arc> = arcs.iter().map(|w| w.arc.clone()).collect();
            let hi = plain.iter().map(|a| a.b).max().unwrap_or(n as i64).max(n as i64);
            render_arcs_line(&plain, Some((1, hi)))
        }
    }
}

pub fn tito(c: &Command) -> Out {
    let plain = [Format::Text, Format::Json];
    let n = need_n(c)?;
    match c.action {
        Action::Join | Action::Meet => {
            let f = format_of(c, Format::Text, &plain)?;
            let ts = titos(c, n)?;
            let t = if c.action == Action::Join { join_tito(n, &ts)? } else { meet_tito(n, &ts)? };
            Ok(tito_out(&t, f))
        }
        Action::Leq => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 2)?;
            let ts = titos(c, n)?;
            let v = leq_tito(&ts[0], &ts[1])?;
            Ok(if f == Format::Json { json_text(json!(v)) } else { v.to_string() })
        }
        Action::Normalize => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 1)?;
            let t = &titos(c, n)?[0];
            Ok(match f {
                Format::Json => json_text(json!({
                    "windows": t.to_string(),
                    "widely_generated": t.is_widely_generated(),
                    "encoding": encode(t).to_json(),
                })),
                _ => t.to_string(),
            })
        }
        Action::Walls => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 1)?;
            let walls = lower_walls_tito(&titos(c, n)?[0]);
            Ok(match f {
                Format::Json => json_text(json!(walls.iter().map(|w| [w.a, w.b]).collect::<Vec<_>>())),
                _ => walls.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "),
            })
        }
        Action::Flip => {
            let f = format_of(c, Format::Text, &plain)?;
            arity(c, 2)?;
            let t = parse_windows(&c.args[0], n)?;
            let w = ReflectionIndex::parse(&c.args[1], n)?;
            Ok(tito_out(&flip_tito(&t, &w)?, f))
        }
        Action::Arcs | Action::Cjr => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json, Format::Svg])?;
            arity(c, 1)?;
            let t = &titos(c, n)?[0];
            let arcs = if c.action == Action::Arcs { lower_wrapped_arcs(t) } else { canonical_join_rep_tito(t)? };
            Ok(match f {
                Format::Svg => wrapped_svg(c, &arcs, n),
                Format::Json => json_text(wrapped_json(&arcs)),
                _ => wrapped_text(&arcs),
            })
        }
        Action::Check => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json, Format::Svg])?;
            let arcs = c.args.iter().map(|s| WrappedArc::parse(s, n)).collect::<Result<Vec<_>, _>>()?;
            let t = join_of_cyclic_collection(&arcs, n)?;
            Ok(if f == Format::Svg { wrapped_svg(c, &arcs, n) } else { tito_out(&t, f) })
        }
        Action::Quotient => {
            let f = format_of(c, Format::Text, &LATTICE_FORMATS)?;
            arity(c, 2)?;
            let q = tito_quotient(n, parse_int(&c.args[0])?, parse_int(&c.args[1])?)?;
            if f == Format::Text {
                let mut lines = Vec::new();
                for i in 0..q.lattice.len() {
                    let word: Vec<String> = q.words[i].iter().map(|x| x.to_string()).collect();
                    lines.push(format!("{}: {} .. {}", word.join(","), q.bottoms[i], q.tops[i]));
                }
                return Ok(lines.join("\n"));
            }
            Ok(lattice_out(&q.lattice, f))
        }
        Action::Enumerate => Err(unsupported("tito", c)),
    }
}

// ---- extended weak order ----

pub fn dyer(c: &Command) -> Out {
    let plain = [Format::Text, Format::Json];
    let n = need_n(c)?;
    let f = format_of(c, Format::Text, &plain)?;
    let elems = || c.args.iter().map(|s| DyerElement::parse(s, n)).collect::<Result<Vec<_>, _>>();
    let show = |d: &DyerElement| match f {
        Format::Json => json_text(json!({ "element": d.to_string(), "windows": d.rep().to_string() })),
        _ => d.to_string(),
    };
    match c.action {
        Action::Normalize => {
            arity(c, 1)?;
            Ok(show(&dyer_normal_form(elems()?[0].rep())))
        }
        Action::Join => Ok(show(&dyer_join(n, &elems()?)?)),
        Action::Meet => Ok(show(&dyer_meet(n, &elems()?)?)),
        Action::Leq => {
            arity(c, 2)?;
            let es = elems()?;
            let v = dyer_leq(&es[0], &es[1])?;
            Ok(if f == Format::Json { json_text(json!(v)) } else { v.to_string() })
        }
        Action::Enumerate => {
            arity(c, 0)?;
            let sets = enumerate_biclosed_fin(n)?;
            Ok(match f {
                Format::Json => json_text(json!(sets.iter().map(|s| &s.pairs).collect::<Vec<_>>())),
                _ => sets
                    .iter()
                    .map(|s| {
                        let p: Vec<String> = s.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
                        format!("{{{}}}", p.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        _ => Err(unsupported("dyer", c)),
    }
}

// ---- finite posets ----

fn read_poset(path: &str) -> Result<FinitePoset, Failure> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| usage(format!("reading stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?
    };
    Ok(FinitePoset::from_json(&text)?)
}

pub fn lab(c: &Command) -> Out {
    match c.action {
        Action::Check => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json])?;
            arity(c, 1)?;
            let lat = check_lattice(read_poset(&c.args[0])?)?;
            let labels = lat.poset.labels();
            let jsd = lat.is_join_semidistributive();
            let msd = lat.is_meet_semidistributive();
            let ji: Vec<&String> = lat.join_irreducibles().iter().map(|&x| &labels[x]).collect();
            let mi: Vec<&String> = lat.meet_irreducibles().iter().map(|&x| &labels[x]).collect();
            Ok(match f {
                Format::Json => json_text(json!({
                    "elements": lat.len(),
                    "lattice": true,
                    "join_semidistributive": jsd,
                    "meet_semidistributive": msd,
                    "join_irreducibles": ji,
                    "meet_irreducibles": mi,
                })),
                _ => format!(
                    "lattice with {} elements\njoin-semidistributive: {jsd}\nmeet-semidistributive: {msd}\njoin-irreducibles: {}\nmeet-irreducibles: {}",
                    lat.len(),
                    ji.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" "),
                    mi.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" "),
                ),
            })
        }
        Action::Cjr => {
            let f = format_of(c, Format::Text, &[Format::Text, Format::Json])?;
            arity(c, 1)?;
            let lat = check_lattice(read_poset(&c.args[0])?)?;
            let labels = lat.poset.labels();
            let reps: Vec<(String, Option<Vec<String>>)> = (0..lat.len())
                .map(|x| {
                    (
                        labels[x].clone(),
                        lat.canonical_join_rep(x).map(|r| r.iter().map(|&y| labels[y].clone()).collect()),
                    )
                })
                .collect();
            Ok(match f {
                Format::Json => json_text(Value::Object(reps.into_iter().map(|(k, v)| (k, json!(v))).collect())),
                _ => reps
                    .iter()
                    .map(|(k, v)| match v {
                        Some(r) => format!("{k}: {}", r.join(" ")),
                        None => format!("{k}: none"),
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Action::Quotient => {
            let f = format_of(c, Format::Text, &LATTICE_FORMATS)?;
            let (path, pairs) = c.args.split_first().ok_or_else(|| usage("quotient takes FILE and x=y pairs"))?;
            let lat = check_lattice(read_poset(path)?)?;
            let labels = lat.poset.labels();
            let index = |s: &str| {
                labels
                    .iter()
                    .position(|l| l == s)
                    .ok_or_else(|| Failure::from(Error::Parse(format!("no element {s:?}"))))
            };
            let mut glue = Vec::new();
            for p in pairs {
                let (x, y) = p.split_once('=').ok_or_else(|| Error::Parse(format!("expected x=y, got {p:?}")))?;
                glue.push((index(x)?, index(y)?));
            }
            let classes = lat.congruence_generated_by(&glue);
            Ok(lattice_out(&lat.quotient(&classes)?, f))
        }
        _ => Err(unsupported("lab", c)),
    }
}

// ---- rendering ----

pub fn render(c: &Command) -> Out {
    match c.action {
        Action::Arcs => {
            format_of(c, Format::Svg, &[Format::Svg])?;
            match c.mode {
                Mode::Line => {
                    let arcs = c.args.iter().map(|s| s.parse::<Arc>()).collect::<Result<Vec<_>, _>>()?;
                    let range = c.n.map(|n| (1, n as i64));
                    Ok(render_arcs_line(&arcs, range))
                }
                Mode::Circle => {
                    let n = need_n(c)?;
                    let arcs = c.args.iter().map(|s| WrappedArc::parse(s, n)).collect::<Result<Vec<_>, _>>()?;
                    Ok(render_arcs_circle(&arcs, n))
                }
            }
        }
        Action::Enumerate => {
            let f = format_of(c, Format::Dot, &[Format::Dot, Format::Svg])?;
            arity(c, 0)?;
            let n = need_n(c)?;
            if n > 6 {
                return Err(Error::TooLarge(format!("S_{n} has too many elements to draw")).into());
            }
            Ok(lattice_out(&weak_order_sn_lattice(n), f))
        }
        Action::Quotient => {
            let f = format_of(c, Format::Dot, &[Format::Dot, Format::Svg])?;
            arity(c, 1)?;
            let p = read_poset(&c.args[0])?;
            Ok(if f == Format::Dot { render_hasse_dot(&p) } else { render_hasse_svg(&p) })
        }
        _ => Err(unsupported("render", c)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("2,4").unwrap(), (2, 4));
        assert_eq!(parse_pair("(2, 4)").unwrap(), (2, 4));
        assert_eq!(parse_pair("<-1,3>").unwrap(), (-1, 3));
        assert_eq!(parse_pair("2").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Usage("x".into()).exit_code(), 2);
        assert_eq!(Failure::Domain(Error::Parse("x".into())).exit_code(), 2);
        assert_eq!(Failure::Domain(Error::NotWidelyGenerated("x".into())).exit_code(), 1);
    }
}
