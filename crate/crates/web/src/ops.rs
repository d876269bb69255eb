use serde_json::json;

use weakorder::lab::tito_quotient;
use weakorder::render::{render_arcs_circle, render_arcs_line, render_hasse_svg};
use weakorder::sn::lower_arcs_sn;
use weakorder::tito::{join_tito, lower_wrapped_arcs, meet_tito, parse_windows};
use weakorder::Permutation;

pub fn sn_arc_diagram(perm: &str) -> Result<String, String> {
    let p: Permutation = perm.parse().map_err(|e: weakorder::Error| e.to_string())?;
    Ok(render_arcs_line(&lower_arcs_sn(&p), Some((1, p.n() as i64))))
}

/// The circle diagram shows the lower wrapped arcs of the join.
pub fn tito_join_meet(n: usize, x: &str, y: &str) -> Result<String, String> {
    if n == 0 || n > 12 {
        return Err("n must be between 1 and 12".into());
    }
    let x = parse_windows(x, n).map_err(|e| e.to_string())?;
    let y = parse_windows(y, n).map_err(|e| e.to_string())?;
    let ts = [x, y];
    let join = join_tito(n, &ts).map_err(|e| e.to_string())?;
    let meet = meet_tito(n, &ts).map_err(|e| e.to_string())?;
    let svg = render_arcs_circle(&lower_wrapped_arcs(&join), n);
    Ok(json!({
        "join": join.to_string(),
        "meet": meet.to_string(),
        "widelyGenerated": join.is_widely_generated(),
        "svg": svg,
    })
    .to_string())
}

pub fn quotient_hasse(n: usize, a: i64, b: i64) -> Result<String, String> {
    if n == 0 || n > 12 {
        return Err("n must be between 1 and 12".into());
    }
    if b - a + 1 > 6 {
        return Err("use a window of at most 6 integers".into());
    }
    let q = tito_quotient(n, a, b).map_err(|e| e.to_string())?;
    Ok(render_hasse_svg(&q.lattice.poset))
}
