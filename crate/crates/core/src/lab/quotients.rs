//! Finite quotients of the weak orders on total orders of the integers and
//! on TITOs, by the congruence "same restriction to the window [A,B]".

use super::{check_lattice, FiniteLattice, FinitePoset};
use crate::error::{Error, Result};
use crate::sn::{all_permutations, Permutation};
use crate::tito::{closure_of_translates, Tito};
use crate::total::{all_orders_on, TotalOrder};

/// Largest window B-A+1 accepted by the quotient builders.
pub const MAX_QUOTIENT_WINDOW: i64 = 8;

pub fn weak_order_sn_lattice(n: usize) -> FiniteLattice {
    let perms: Vec<Permutation> = all_permutations(n);
    let invs: Vec<_> = perms.iter().map(|p| p.inversions().pairs).collect();
    let labels = perms.iter().map(|p| p.to_string()).collect();
    let p = FinitePoset::from_fn(labels, |i, j| invs[i].is_subset(&invs[j])).unwrap();
    check_lattice(p).unwrap()
}

fn check_window(a: i64, b: i64) -> Result<()> {
    if a >= b {
        return Err(Error::OutOfRange(format!("window [{a},{b}] needs A < B")));
    }
    if b - a + 1 > MAX_QUOTIENT_WINDOW {
        return Err(Error::TooLarge(format!("window [{a},{b}] has more than {MAX_QUOTIENT_WINDOW} elements")));
    }
    Ok(())
}

fn word_label(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}

/// Quotient of the weak order on total orders by agreement on [A,B]; its
/// elements are the orderings of [A,B].
pub fn tot_quotient(a: i64, b: i64) -> Result<FiniteLattice> {
    check_window(a, b)?;
    let orders: Vec<TotalOrder> = all_orders_on(a, b);
    let labels = orders.iter().map(|t| word_label(&t.word(a, b))).collect();
    let p = FinitePoset::from_fn(labels, |i, j| orders[i].leq(&orders[j]))?;
    check_lattice(p)
}

/// Quotient of the TITO weak order by agreement on [A,B].
#[derive(Debug, Clone)]
pub struct TitoQuotient {
    pub n: usize,
    pub window: (i64, i64),
    pub lattice: FiniteLattice,
    /// Ordering of [A,B] for each class.
    pub words: Vec<Vec<i64>>,
    /// Least TITO in each class.
    pub bottoms: Vec<Tito>,
    /// Greatest TITO in each class.
    pub tops: Vec<Tito>,
}

impl TitoQuotient {
    pub fn class_of(&self, t: &Tito) -> Option<usize> {
        let w = t.word(self.window.0, self.window.1);
        self.words.iter().position(|x| *x == w)
    }
}

fn restricts_to(t: &Tito, order: &TotalOrder, a: i64, b: i64) -> bool {
    (a..=b).all(|x| (x + 1..=b).all(|y| t.lt(y, x) == order.is_inversion(x, y)))
}

/// An ordering of [A,B] is realized by some TITO iff the smallest TITO
/// containing the translates of its inversions still restricts to it; that
/// TITO is then the bottom of the class.
pub fn tito_quotient(n: usize, a: i64, b: i64) -> Result<TitoQuotient> {
    check_window(a, b)?;
    let mut words = Vec::new();
    let mut bottoms = Vec::new();
    let mut tops = Vec::new();
    let mut orders = Vec::new();
    for order in all_orders_on(a, b) {
        let low = closure_of_translates(n, order.inversions().iter().copied())?;
        if !restricts_to(&low, &order, a, b) {
            continue;
        }
        let word = order.word(a, b);
        let rev: Vec<i64> = word.iter().rev().copied().collect();
        let rev_order = TotalOrder::from_word(a, &rev)?;
        let high = closure_of_translates(n, rev_order.inversions().iter().copied())?.reverse();
        words.push(word);
        bottoms.push(low);
        tops.push(high);
        orders.push(order);
    }
    let labels = bottoms.iter().map(|t| t.to_string()).collect();
    let p = FinitePoset::from_fn(labels, |i, j| orders[i].leq(&orders[j]))?;
    Ok(TitoQuotient { n, window: (a, b), lattice: check_lattice(p)?, words, bottoms, tops })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tito::{flip_tito, leq_tito, lower_walls_tito, parse_windows};

    #[test]
    fn tot_quotient_sizes() {
        assert_eq!(tot_quotient(1, 3).unwrap().len(), 6);
        assert_eq!(tot_quotient(1, 2).unwrap().len(), 2);
        assert_eq!(tot_quotient(-2, 1).unwrap().len(), 24);
        assert!(matches!(tot_quotient(1, 9), Err(Error::TooLarge(_))));
    }

    #[test]
    fn tito_quotient_n2() {
        let q = tito_quotient(2, 1, 2).unwrap();
        assert!(q.lattice.is_semidistributive());
        assert_eq!(q.bottoms[q.lattice.bottom], Tito::standard(2));
        assert_eq!(q.tops[q.lattice.top], Tito::reversal(2));
        let q = tito_quotient(2, 1, 4).unwrap();
        let top = parse_windows("[~2,1]", 2).unwrap();
        assert_eq!(q.class_of(&top), Some(q.lattice.top));
        assert_eq!(q.class_of(&Tito::standard(2)), Some(q.lattice.bottom));
    }

    // Each class is an interval [bottom, top], and the quotient map is a
    // bijection from the lower covers of a bottom onto the lower covers of
    // its class.
    #[test]
    fn bottoms_and_tops_of_classes() {
        for (n, a, b) in [(2, 1, 4), (3, 1, 5), (3, 0, 3)] {
            let q = tito_quotient(n, a, b).unwrap();
            for x in 0..q.lattice.len() {
                assert!(leq_tito(&q.bottoms[x], &q.tops[x]).unwrap());
                assert_eq!(q.class_of(&q.tops[x]), Some(x));
                assert!(q.bottoms[x].is_widely_generated());
                let mut classes = Vec::new();
                for w in lower_walls_tito(&q.bottoms[x]) {
                    let y = flip_tito(&q.bottoms[x], &w).unwrap();
                    let c = q.class_of(&y).unwrap();
                    assert!(leq_tito(&y, &q.tops[c]).unwrap());
                    classes.push(c);
                }
                classes.sort_unstable();
                assert_eq!(classes, q.lattice.poset.lower_covers(x), "class {}", q.bottoms[x]);
            }
        }
    }
}
