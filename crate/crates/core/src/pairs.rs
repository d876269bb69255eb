//! Closure and interior of inversion-type pair sets over a finite ground set.

use std::collections::BTreeSet;

pub type PairSet = BTreeSet<(i64, i64)>;

fn index_matrix(ground: &[i64], set: &PairSet) -> Vec<Vec<bool>> {
    let m = ground.len();
    let mut mat = vec![vec![false; m]; m];
    for &(a, b) in set {
        let i = ground.binary_search(&a).expect("pair outside ground set");
        let j = ground.binary_search(&b).expect("pair outside ground set");
        mat[i][j] = true;
    }
    mat
}

/// Closes `mat` under (a,b),(b,c) => (a,c). Pairs are processed by increasing
/// span, so every chain is already closed when its span is reached.
fn close_matrix(mat: &mut [Vec<bool>]) {
    let m = mat.len();
    for d in 2..m {
        for i in 0..m - d {
            let j = i + d;
            if !mat[i][j] && (i + 1..j).any(|k| mat[i][k] && mat[k][j]) {
                mat[i][j] = true;
            }
        }
    }
}

fn matrix_pairs(ground: &[i64], mat: &[Vec<bool>]) -> PairSet {
    let mut out = PairSet::new();
    for i in 0..ground.len() {
        for j in i + 1..ground.len() {
            if mat[i][j] {
                out.insert((ground[i], ground[j]));
            }
        }
    }
    out
}

/// All pairs (a,b) with a < b drawn from `ground` (sorted ascending).
pub fn all_pairs(ground: &[i64]) -> PairSet {
    let mut out = PairSet::new();
    for i in 0..ground.len() {
        for j in i + 1..ground.len() {
            out.insert((ground[i], ground[j]));
        }
    }
    out
}

pub fn closure(ground: &[i64], set: &PairSet) -> PairSet {
    let mut mat = index_matrix(ground, set);
    close_matrix(&mut mat);
    matrix_pairs(ground, &mat)
}

pub fn interior(ground: &[i64], set: &PairSet) -> PairSet {
    let all = all_pairs(ground);
    let comp: PairSet = all.difference(set).copied().collect();
    let cl = closure(ground, &comp);
    all.difference(&cl).copied().collect()
}

pub fn is_closed(ground: &[i64], set: &PairSet) -> bool {
    closure(ground, set) == *set
}

pub fn is_biclosed(ground: &[i64], set: &PairSet) -> bool {
    let all = all_pairs(ground);
    let comp: PairSet = all.difference(set).copied().collect();
    is_closed(ground, set) && is_closed(ground, &comp)
}
