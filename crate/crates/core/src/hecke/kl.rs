//! Memoized Kazhdan-Lusztig polynomials in the self-dual normalization
//! `C_w = H_w + sum_{y<w} p(y,w) H_y` with `p(y,w)` in `v Z[v]`.

use std::sync::{Arc, OnceLock};

use crate::coxeter::{CoxeterSystem, Element};
use crate::poly::{Coefficient, LaurentPoly};

/// One column of the KL matrix: all `p(y,w)` for a fixed `w`.
#[derive(Clone)]
pub struct KlColumn<C = i64> {
    /// `(y, p(y,w))` for every `y <= w`, ascending by `y`; ends with `(w, 1)`.
    pub entries: Vec<(Element, LaurentPoly<C>)>,
    /// `(z, mu(z,w))` for every `z < w` with nonzero mu, ascending by `z`.
    pub mu_below: Vec<(Element, C)>,
}

impl<C: Coefficient> KlColumn<C> {
    fn from_entries(entries: Vec<(Element, LaurentPoly<C>)>, w: Element) -> Self {
        let mu_below = entries
            .iter()
            .filter(|(y, _)| *y != w)
            .filter_map(|(y, p)| {
                let m = p.coeff(1);
                (!m.is_zero()).then_some((*y, m))
            })
            .collect();
        KlColumn { entries, mu_below }
    }

    pub fn get(&self, y: Element) -> Option<&LaurentPoly<C>> {
        self.entries
            .binary_search_by_key(&y, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }
}

/// Demand-driven table of KL polynomials and mu-values.
///
/// Columns are computed on first access and then shared; concurrent readers
/// are fine since every column sits behind a [`OnceLock`].
pub struct KlTable<C = i64> {
    system: Arc<CoxeterSystem>,
    columns: Vec<OnceLock<KlColumn<C>>>,
}

impl<C: Coefficient> KlTable<C> {
    pub fn new(system: Arc<CoxeterSystem>) -> Self {
        let columns = (0..system.order()).map(|_| OnceLock::new()).collect();
        KlTable { system, columns }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn system_arc(&self) -> Arc<CoxeterSystem> {
        Arc::clone(&self.system)
    }

    /// Forces every column, in canonical order.
    pub fn precompute_all(&self) {
        for w in self.system.elements() {
            self.column(w);
        }
    }

    pub fn is_column_cached(&self, w: Element) -> bool {
        self.columns[w.index()].get().is_some()
    }

    pub fn column(&self, w: Element) -> &KlColumn<C> {
        if let Some(c) = self.columns[w.index()].get() {
            return c;
        }
        let col = self.compute_column(w);
        // A concurrent initializer computes the same column.
        let _ = self.columns[w.index()].set(col);
        self.columns[w.index()].get().unwrap()
    }

    /// Installs a precomputed column, e.g. one read from disk. A column that
    /// is already present is kept.
    pub fn install_column(&self, w: Element, entries: Vec<(Element, LaurentPoly<C>)>) {
        let _ = self.columns[w.index()].set(KlColumn::from_entries(entries, w));
    }

    /// Recursion along the smallest left descent `s` of `w`:
    /// `C_s C_{sw} = C_w + sum_{z < sw, sz < z} mu(z,sw) C_z`.
    fn compute_column(&self, w: Element) -> KlColumn<C> {
        let sys = &*self.system;
        if w == Element::IDENTITY {
            return KlColumn::from_entries(vec![(w, LaurentPoly::one())], w);
        }
        let s = sys.left_descents(w).first().expect("w != e");
        let ws = sys.lmul_gen(s, w);
        let mut acc: Vec<LaurentPoly<C>> = vec![LaurentPoly::zero(); w.index() + 1];
        let prev = self.column(ws);
        for (y, q) in &prev.entries {
            let sy = sys.lmul_gen(s, *y);
            acc[sy.index()].add_shifted(q, 0);
            let shift = if sy > *y { 1 } else { -1 };
            acc[y.index()].add_shifted(q, shift);
        }
        for (z, mu) in &prev.mu_below {
            if sys.has_left_descent(*z, s) {
                for (y, q) in &self.column(*z).entries {
                    acc[y.index()].sub_shifted(&q.scale(mu), 0);
                }
            }
        }
        let entries = acc
            .into_iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| (Element::from_index(i), p))
            .collect();
        KlColumn::from_entries(entries, w)
    }

    /// `p(y,w)`; zero unless `y <= w`.
    pub fn p(&self, y: Element, w: Element) -> LaurentPoly<C> {
        if y > w {
            return LaurentPoly::zero();
        }
        self.column(w).get(y).cloned().unwrap_or_default()
    }

    /// `mu(y,w)`: the coefficient of `v` in `p(y,w)` for `y < w`, else zero.
    pub fn mu(&self, y: Element, w: Element) -> C {
        if y >= w {
            return C::zero();
        }
        self.column(w)
            .get(y)
            .map(|p| p.coeff(1))
            .unwrap_or_else(C::zero)
    }

    /// Nonzero `mu(z,w)` with `z < w`.
    pub fn mu_below(&self, w: Element) -> &[(Element, C)] {
        &self.column(w).mu_below
    }
}
