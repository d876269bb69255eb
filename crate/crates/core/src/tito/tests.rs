use proptest::prelude::*;

use super::*;
use crate::total::{ji_from_arc_tot, TotalOrder};

fn t(s: &str, n: usize) -> Tito {
    parse_windows(s, n).unwrap()
}

fn ri(a: i64, b: i64, n: usize) -> ReflectionIndex {
    ReflectionIndex::new(a, b, n).unwrap()
}

fn arc_strings(v: &[WrappedArc]) -> Vec<String> {
    v.iter().map(|w| w.to_string()).collect()
}

prop_compose! {
    fn arb_tito()(n in 1usize..=4)
        (n in Just(n),
         perm in Just((0..n as i64).collect::<Vec<_>>()).prop_shuffle(),
         cuts in proptest::collection::vec(any::<bool>(), n),
         dirs in proptest::collection::vec(any::<bool>(), n),
         shifts in proptest::collection::vec(-3i64..=3, n)) -> Tito {
        let mut blocks: Vec<Block> = Vec::new();
        let mut cur = Vec::new();
        for (i, &r) in perm.iter().enumerate() {
            cur.push(r + shifts[i] * n as i64);
            if cuts[i] || i + 1 == n {
                let d = if dirs[blocks.len()] { Direction::Waning } else { Direction::Waxing };
                blocks.push(Block::new(d, std::mem::take(&mut cur)));
            }
        }
        Tito::new(n, blocks).unwrap()
    }
}

#[test]
fn parse_examples() {
    // Windows slide until the entry sum lies in [k(k+1)/2, k(k+1)/2 + n - 1].
    assert_eq!(t("[1,0,3,2]", 4).to_string(), "[0,3,2,5]");
    assert_eq!(t("[1][~2,3][0]", 4).to_string(), "[1][~2,3][4]");
    assert!(matches!(parse_windows("[1,1]", 2), Err(Error::InvalidWindows(_))));
    assert!(matches!(parse_windows("[1][]", 2), Err(Error::InvalidWindows(_))));
    assert!(matches!(parse_windows("[1,x]", 2), Err(Error::Parse(_))));
    assert!(matches!(parse_windows("", 2), Err(Error::Parse(_))));
    assert!(matches!(parse_windows("[1]", 2), Err(Error::InvalidWindows(_))));
}

#[test]
fn sliding_windows_normalize_together() {
    for s in ["[2,1,3][~0]", "[-1,2,1][~4]", "[3,6,5][~-64]"] {
        assert_eq!(t(s, 4).to_string(), "[2,1,3][~4]");
    }
    assert_eq!(t("[1,2,3,4]", 4).to_string(), "[1,2,3,4]");
    assert_eq!(t("[3,2]", 2).to_string(), "[0,3]");
    // Invalid variant: residues 3,1,0,0.
    assert!(matches!(parse_windows("[3,5,4][~-64]", 4), Err(Error::InvalidWindows(_))));
}

#[test]
fn comparisons() {
    let x = t("[1,0,3,2]", 4);
    assert!(x.lt(1, 0));
    assert!(!x.lt(5, 5));
    assert!(inversion_contains(&x, &ri(2, 3, 4)));
    assert!(!inversion_contains(&x, &ri(1, 2, 4)));
    assert!(inversion_contains(&x, &ri(0, 1, 4)));
    let y = t("[~1][2]", 2);
    assert!(y.lt(3, 2));
    for (a, b) in [(1, 3), (1, 5), (2, 3), (2, 5)] {
        assert!(inversion_contains(&y, &ri(a, b, 2)), "<{a},{b}>");
    }
    assert!(!inversion_contains(&y, &ri(2, 4, 2)));
    assert!(!inversion_contains(&Tito::standard(3), &ri(1, 5, 3)));
}

#[test]
fn reflection_index_canonical_form() {
    assert_eq!(ri(0, 1, 4), ReflectionIndex { a: 4, b: 5 });
    assert_eq!(ri(-1, 1, 2).to_string(), "<1,3>");
    assert!(ri(1, 3, 2).is_imaginary(2));
    assert_eq!(ReflectionIndex::parse("<0,1>", 4).unwrap(), ri(4, 5, 4));
}

#[test]
fn encoding_example() {
    let e = encode(&t("[~1][2]", 2));
    assert_eq!(e.dir, vec![Direction::Waxing, Direction::Waning]);
    // Residue 1 entirely before residue 0 (class of 2).
    assert!(e.get(0, 1).is_all(1));
    assert!(e.get(1, 0).is_empty());
    assert_eq!(decode(&e).unwrap(), t("[~1][2]", 2));
    let json = e.to_json();
    assert_eq!(json["dir"], serde_json::json!(["waning", "waxing"]));
}

#[test]
fn reverse_examples() {
    assert_eq!(t("[~1][2]", 2).reverse().to_string(), "[~2][1]");
    assert_eq!(Tito::reversal(2).to_string(), "[~2,1]");
    assert_eq!(Tito::reversal(3).to_string(), "[~3,2,1]");
}

#[test]
fn join_meet_examples() {
    let j = join_tito(2, &[t("[2,1]", 2), t("[0,3]", 2)]).unwrap();
    assert_eq!(j.to_string(), "[~2,1]");
    let x = t("[1,0,3,2]", 4);
    assert_eq!(join_tito(4, std::slice::from_ref(&x)).unwrap(), x);
    assert_eq!(join_tito(4, &[x.clone(), Tito::standard(4)]).unwrap(), x);
    assert_eq!(join_tito(3, &[]).unwrap(), Tito::standard(3));
    assert_eq!(meet_tito(3, &[]).unwrap(), Tito::reversal(3));
    assert!(matches!(join_tito(2, &[Tito::standard(3)]), Err(Error::MixedSizes(2, 3))));
    let m = meet_tito(2, &[t("[~1][2]", 2), t("[~2][1]", 2)]).unwrap();
    assert_eq!(m, Tito::standard(2));
}

#[test]
fn leq_examples() {
    let (a, b) = (t("[2,1]", 2), t("[0,3]", 2));
    assert!(leq_tito(&a, &Tito::reversal(2)).unwrap());
    assert!(!leq_tito(&a, &b).unwrap());
    assert!(!leq_tito(&b, &a).unwrap());
    assert!(leq_tito(&Tito::standard(2), &a).unwrap());
}

#[test]
fn wall_examples() {
    let walls = |s: &str| lower_walls_tito(&t(s, 2)).iter().map(|w| w.to_string()).collect::<Vec<_>>();
    assert_eq!(walls("[~2,1]"), ["<1,2>", "<2,3>"]);
    assert_eq!(walls("[~1][~2]"), ["<1,3>", "<2,4>"]);
    assert!(walls("[1][2]").is_empty());
}

#[test]
fn flip_examples() {
    let x = flip_tito(&t("[1,0,3,2]", 4), &ri(2, 3, 4)).unwrap();
    assert_eq!(x, t("[1,0,2,3]", 4));
    let y = flip_tito(&t("[~1][~2]", 2), &ri(1, 3, 2)).unwrap();
    assert_eq!(y.to_string(), "[1][~2]");
    assert!(matches!(flip_tito(&t("[1][2]", 2), &ri(1, 3, 2)), Err(Error::NotAWall(_))));
}

#[test]
fn flips_descend_to_standard() {
    let mut x = t("[1,0,3,2]", 4);
    while let Some(w) = lower_walls_tito(&x).first().copied() {
        x = flip_tito(&x, &w).unwrap();
    }
    assert_eq!(x, Tito::standard(4));
}

#[test]
fn wrapped_arc_examples() {
    assert!(is_wrapped_arc(&WrappedArc::parse("<2,7|5 6|3 4>", 4).unwrap()));
    assert!(!is_wrapped_arc(&WrappedArc::parse("<2,7|5|3 4 6>", 4).unwrap()));
    assert_eq!(arc_strings(&lower_wrapped_arcs(&t("[~2,1]", 2))), ["<1,2||>", "<2,3||>"]);
    assert_eq!(arc_strings(&lower_wrapped_arcs(&t("[2][~1]", 2))), ["<1,3|2|>"]);
    assert!(lower_wrapped_arcs(&Tito::standard(3)).is_empty());
    assert_eq!(WrappedArc::parse("<5,6||>", 4).unwrap().to_string(), "<1,2||>");
}

#[test]
fn ji_examples() {
    let ji = |s: &str| ji_from_wrapped_arc(&WrappedArc::parse(s, 2).unwrap()).unwrap().to_string();
    assert_eq!(ji("<1,2||>"), "[2,1]");
    assert_eq!(ji("<1,3|2|>"), "[2][~1]");
    assert_eq!(ji("<2,3||>"), "[0,3]");
}

#[test]
fn cjr_examples() {
    let x = t("[~2,1]", 2);
    let cjr = canonical_join_rep_tito(&x).unwrap();
    assert_eq!(arc_strings(&cjr), ["<1,2||>", "<2,3||>"]);
    assert_eq!(join_of_cyclic_collection(&cjr, 2).unwrap(), x);
    assert!(canonical_join_rep_tito(&Tito::standard(2)).unwrap().is_empty());
    assert!(matches!(canonical_join_rep_tito(&t("[1][2]", 2)), Err(Error::NotWidelyGenerated(_))));
    assert!(t("[~1][2]", 2).is_widely_generated());
}

fn ji_oracle(w: &WrappedArc) -> Tito {
    let j: TotalOrder = ji_from_arc_tot(&w.arc);
    closure_of_translates(w.n, j.inversions().iter().copied()).unwrap()
}

#[test]
fn ji_cases_match_closure_of_translates() {
    let mut seen = [0usize; 5];
    for n in 1..=4usize {
        for a in 1..=n as i64 {
            for b in a + 1..=a + 3 * n as i64 {
                let inner: Vec<i64> = (a + 1..b).collect();
                for mask in 0u64..1 << inner.len() {
                    let left = inner.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x);
                    let w = WrappedArc::from_left(n, a, b, left).unwrap();
                    if !is_wrapped_arc(&w) {
                        continue;
                    }
                    seen[ji_case(&w) as usize] += 1;
                    let j = ji_from_wrapped_arc(&w).unwrap();
                    assert_eq!(j, ji_oracle(&w), "{w} case {}: {j} vs {}", ji_case(&w), ji_oracle(&w));
                    assert_eq!(lower_wrapped_arcs(&j), vec![w.clone()], "{w}");
                }
            }
        }
    }
    assert!(seen[1..].iter().all(|&c| c > 0), "{seen:?}");
}

proptest! {
    #[test]
    fn translation_invariant(x in arb_tito(), a in -20i64..20, b in -20i64..20) {
        let n = x.n() as i64;
        prop_assert_eq!(x.lt(a, b), x.lt(a + n, b + n));
        prop_assert!(a == b || x.lt(a, b) != x.lt(b, a));
    }

    #[test]
    fn encoding_matches_order(x in arb_tito()) {
        let e = encode(&x);
        let n = x.n() as i64;
        for a in 1..=n {
            for d in 1..=5 * n {
                prop_assert_eq!(e.contains(a, a + d), x.lt(a + d, a));
            }
        }
        prop_assert_eq!(decode(&e).unwrap(), x.clone());
        prop_assert_eq!(e.closed().unwrap(), e);
    }

    #[test]
    fn reverse_is_complement(x in arb_tito()) {
        let r = x.reverse();
        prop_assert_eq!(r.reverse(), x.clone());
        let n = x.n() as i64;
        for a in 1..=n {
            for d in 1..=4 * n {
                prop_assert_eq!(r.is_inversion(a, a + d), !x.is_inversion(a, a + d));
            }
        }
    }

    #[test]
    fn canonical_windows_are_idempotent(x in arb_tito()) {
        prop_assert_eq!(parse_windows(&x.to_string(), x.n()).unwrap(), x);
    }

    #[test]
    fn walls_are_covers(x in arb_tito()) {
        let walls = lower_walls_tito(&x);
        prop_assert!(walls.len() <= x.n());
        let n = x.n() as i64;
        for w in walls {
            let y = flip_tito(&x, &w).unwrap();
            prop_assert!(leq_tito(&y, &x).unwrap());
            for a in 1..=n {
                for d in 1..=4 * n {
                    let dropped = x.is_inversion(a, a + d) && !y.is_inversion(a, a + d);
                    let expected = if w.is_imaginary(x.n()) {
                        ReflectionIndex::new(a, a + d, x.n()).unwrap().a == w.a && d % n == 0
                    } else {
                        ReflectionIndex::new(a, a + d, x.n()).unwrap() == w
                    };
                    prop_assert_eq!(dropped, expected);
                }
            }
        }
    }

    #[test]
    fn join_is_upper_bound_and_meet_lower_bound(x in arb_tito(), seed in any::<u64>()) {
        let y = x.reverse();
        let _ = seed;
        let j = join_tito(x.n(), &[x.clone(), Tito::standard(x.n())]).unwrap();
        prop_assert_eq!(j, x.clone());
        let m = meet_tito(x.n(), &[x.clone(), y.clone()]).unwrap();
        prop_assert!(leq_tito(&m, &x).unwrap() && leq_tito(&m, &y).unwrap());
        let j = join_tito(x.n(), &[x.clone(), y.clone()]).unwrap();
        prop_assert!(leq_tito(&x, &j).unwrap() && leq_tito(&y, &j).unwrap());
    }
}
