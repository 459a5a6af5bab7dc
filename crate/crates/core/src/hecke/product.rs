//! Products in the KL basis.

use crate::coxeter::{CoxeterSystem, Element};
use crate::poly::{Coefficient, LaurentPoly};

use super::{add_h_times_hs, standard_to_kl_dense, Basis, HeckeElt, KlTable};

/// Sparse KL-basis vector, ascending by element.
pub type SparseKl<C = i64> = Vec<(Element, LaurentPoly<C>)>;

/// Dense accumulator that remembers which slots it touched.
struct Scratch<C> {
    slots: Vec<LaurentPoly<C>>,
    touched: Vec<u32>,
    seen: Vec<bool>,
}

impl<C: Coefficient> Scratch<C> {
    fn new(n: usize) -> Self {
        Scratch {
            slots: vec![LaurentPoly::zero(); n],
            touched: Vec::new(),
            seen: vec![false; n],
        }
    }

    #[inline]
    fn slot(&mut self, w: Element) -> &mut LaurentPoly<C> {
        let i = w.index();
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i as u32);
        }
        &mut self.slots[i]
    }

    fn drain(&mut self) -> SparseKl<C> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let i = i as usize;
            self.seen[i] = false;
            let p = std::mem::take(&mut self.slots[i]);
            if !p.is_zero() {
                out.push((Element::from_index(i), p));
            }
        }
        self.touched.clear();
        out
    }
}

/// Adds `f * C_u C_s` to the accumulator.
#[inline]
fn add_kl_times_cs<C: Coefficient>(
    table: &KlTable<C>,
    acc: &mut Scratch<C>,
    u: Element,
    s: usize,
    f: &LaurentPoly<C>,
) {
    let sys = table.system();
    let us = sys.rmul_gen(u, s);
    if us < u {
        acc.slot(u).add_times_quantum_two(f);
        return;
    }
    acc.slot(us).add_shifted(f, 0);
    for (z, mu) in table.mu_below(u) {
        if sys.has_right_descent(*z, s) {
            acc.slot(*z).add_scaled(f, mu);
        }
    }
}

/// All products `C_z C_w` for a fixed left factor `z` and every `w`.
///
/// Uses `C_z C_w = (C_z C_{w'}) C_s - sum_{u<w', us<u} mu(u,w') C_z C_u`
/// with `w = w's`, so each product costs a handful of sparse updates.
pub struct FixedLeftSweep<C = i64> {
    left: Element,
    results: Vec<SparseKl<C>>,
}

impl<C: Coefficient> FixedLeftSweep<C> {
    pub fn compute(table: &KlTable<C>, left: Element) -> Self {
        let sys = table.system();
        let n = sys.order();
        let mut results: Vec<SparseKl<C>> = Vec::with_capacity(n);
        results.push(vec![(left, LaurentPoly::one())]);
        let mut acc = Scratch::new(n);
        for w in sys.elements().skip(1) {
            let s = sys.right_descents(w).first().expect("w != e");
            let prev = sys.rmul_gen(w, s);
            for (u, f) in &results[prev.index()] {
                add_kl_times_cs(table, &mut acc, *u, s, f);
            }
            for (u, mu) in table.mu_below(prev) {
                if sys.has_right_descent(*u, s) {
                    let neg = -mu.clone();
                    for (y, f) in &results[u.index()] {
                        acc.slot(*y).add_scaled(f, &neg);
                    }
                }
            }
            results.push(acc.drain());
        }
        FixedLeftSweep { left, results }
    }

    pub fn left(&self) -> Element {
        self.left
    }

    /// `C_left C_w` in the KL basis.
    pub fn product(&self, w: Element) -> &SparseKl<C> {
        &self.results[w.index()]
    }

    /// `(w, C_left C_w)` for every `w`, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Element, &SparseKl<C>)> + '_ {
        self.results
            .iter()
            .enumerate()
            .map(|(i, r)| (Element::from_index(i), r))
    }
}

/// Every `C_z C_w` for fixed `z`, as KL-basis elements indexed by `w`.
pub fn products_with_fixed_left<C: Coefficient>(
    table: &KlTable<C>,
    z: Element,
) -> Vec<HeckeElt<C>> {
    FixedLeftSweep::compute(table, z)
        .iter()
        .map(|(_, r)| HeckeElt::from_terms(Basis::Kl, r.iter().cloned()))
        .collect()
}

/// `C_x C_y` in the KL basis for a single pair.
///
/// Multiplies `C_x` by each `H_u`, `u <= y`, sharing prefixes along the
/// normal form, then converts back triangularly.
pub fn product_kl<C: Coefficient>(table: &KlTable<C>, x: Element, y: Element) -> HeckeElt<C> {
    let sys: &CoxeterSystem = table.system();
    let n = sys.order();
    let mut cx = vec![LaurentPoly::<C>::zero(); n];
    for (u, p) in &table.column(x).entries {
        cx[u.index()] = p.clone();
    }
    // Every prefix of a `u <= y` is again below `y` and comes earlier.
    let mut memo: Vec<Option<Vec<LaurentPoly<C>>>> = vec![None; y.index() + 1];
    let mut total = vec![LaurentPoly::<C>::zero(); n];
    for (u, p) in &table.column(y).entries {
        let cur = if *u == Element::IDENTITY {
            cx.clone()
        } else {
            let s = *sys.word_letters(*u).last().unwrap() as usize;
            let base = memo[sys.rmul_gen(*u, s).index()]
                .as_ref()
                .expect("prefix is below y");
            let mut next = vec![LaurentPoly::<C>::zero(); n];
            for (i, f) in base.iter().enumerate() {
                if !f.is_zero() {
                    add_h_times_hs(sys, &mut next, Element::from_index(i), s, f);
                }
            }
            next
        };
        for (t, c) in total.iter_mut().zip(&cur) {
            if !c.is_zero() {
                *t += &(c * p);
            }
        }
        memo[u.index()] = Some(cur);
    }
    HeckeElt::from_dense(Basis::Kl, standard_to_kl_dense(table, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CartanType;
    use crate::hecke::h_constants;
    use std::sync::Arc;

    #[test]
    fn sweep_matches_naive_products() {
        for (ty, n) in [
            (CartanType::A, 2),
            (CartanType::B, 2),
            (CartanType::G, 2),
            (CartanType::A, 3),
        ] {
            let t = KlTable::<i64>::new(Arc::new(CoxeterSystem::new(ty, n).unwrap()));
            let sys = t.system();
            for z in sys.elements() {
                let sweep = products_with_fixed_left(&t, z);
                for w in sys.elements() {
                    let naive = h_constants(&t, z, w);
                    assert_eq!(
                        sweep[w.index()],
                        naive,
                        "{ty}{n} C_{} C_{}",
                        sys.word(z),
                        sys.word(w)
                    );
                    assert_eq!(product_kl(&t, z, w), naive);
                }
            }
        }
    }
}
