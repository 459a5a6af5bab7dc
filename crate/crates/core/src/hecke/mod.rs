//! The Iwahori-Hecke algebra over `Z[v, v^-1]` with quadratic relation
//! `(H_s + v)(H_s - v^-1) = 0`, its Kazhdan-Lusztig basis and structure
//! constants.

mod kl;
mod product;

use std::collections::BTreeMap;
use std::fmt;

pub use kl::{KlColumn, KlTable};
pub use product::{product_kl, products_with_fixed_left, FixedLeftSweep, SparseKl};

use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};
use crate::poly::{Coefficient, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `{H_w}`.
    Standard,
    /// `{C_w}`.
    Kl,
}

/// A finite linear combination of basis elements.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt<C = i64> {
    basis: Basis,
    terms: BTreeMap<Element, LaurentPoly<C>>,
}

impl<C: Coefficient> HeckeElt<C> {
    pub fn zero(basis: Basis) -> Self {
        HeckeElt {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, w: Element) -> Self {
        let mut e = Self::zero(basis);
        e.terms.insert(w, LaurentPoly::one());
        e
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Element, LaurentPoly<C>)>,
    {
        let mut e = Self::zero(basis);
        for (w, p) in terms {
            e.add_term(w, &p);
        }
        e
    }

    pub(crate) fn from_dense(basis: Basis, dense: Vec<LaurentPoly<C>>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| (Element::from_index(i), p))
            .collect();
        HeckeElt { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: Element) -> LaurentPoly<C> {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Element, &LaurentPoly<C>)> + '_ {
        self.terms.iter().map(|(w, p)| (*w, p))
    }

    pub fn support(&self) -> impl Iterator<Item = Element> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Element, p: &LaurentPoly<C>) {
        let slot = self.terms.entry(w).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (w, p) in other.iter() {
            out.add_term(w, p);
        }
        Ok(out)
    }

    pub fn scale(&self, f: &LaurentPoly<C>) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, p)| (*w, p * f))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        HeckeElt {
            basis: self.basis,
            terms,
        }
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Usage(format!(
                "operands are in different bases ({:?} and {:?}); convert first",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::Usage(format!(
                "expected an element in the {basis:?} basis, got {:?}",
                self.basis
            )));
        }
        Ok(())
    }

    fn to_dense(&self, order: usize) -> Vec<LaurentPoly<C>> {
        let mut dense = vec![LaurentPoly::zero(); order];
        for (w, p) in self.iter() {
            dense[w.index()] = p.clone();
        }
        dense
    }

    pub fn display<'a>(&'a self, sys: &'a CoxeterSystem) -> impl fmt::Display + 'a {
        DisplayElt { elt: self, sys }
    }
}

impl<C: Coefficient> fmt::Debug for HeckeElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeckeElt")
            .field("basis", &self.basis)
            .field(
                "terms",
                &self
                    .terms
                    .iter()
                    .map(|(w, p)| (w.index(), p))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

struct DisplayElt<'a, C> {
    elt: &'a HeckeElt<C>,
    sys: &'a CoxeterSystem,
}

impl<C: Coefficient> fmt::Display for DisplayElt<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elt.is_zero() {
            return write!(f, "0");
        }
        let sym = match self.elt.basis {
            Basis::Standard => "H",
            Basis::Kl => "C",
        };
        for (i, (w, p)) in self.elt.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if p.is_one() {
                write!(f, "{sym}_{}", self.sys.word(w))?;
            } else {
                write!(f, "({p}) {sym}_{}", self.sys.word(w))?;
            }
        }
        Ok(())
    }
}

/// `acc += f * (x H_s)` where `x = H_w`, written into a dense standard-basis vector.
#[inline]
pub(crate) fn add_h_times_hs<C: Coefficient>(
    sys: &CoxeterSystem,
    acc: &mut [LaurentPoly<C>],
    w: Element,
    s: usize,
    f: &LaurentPoly<C>,
) {
    let ws = sys.rmul_gen(w, s);
    acc[ws.index()].add_shifted(f, 0);
    if ws < w {
        acc[w.index()].add_shifted(f, -1);
        acc[w.index()].sub_shifted(f, 1);
    }
}

/// Right multiplication of a dense standard-basis vector by `H_s`.
pub(crate) fn dense_times_hs<C: Coefficient>(
    sys: &CoxeterSystem,
    x: &[LaurentPoly<C>],
    s: usize,
) -> Vec<LaurentPoly<C>> {
    let mut out = vec![LaurentPoly::zero(); x.len()];
    for (i, f) in x.iter().enumerate() {
        if !f.is_zero() {
            add_h_times_hs(sys, &mut out, Element::from_index(i), s, f);
        }
    }
    out
}

/// Product of two standard-basis elements, built one generator at a time.
pub fn multiply_standard<C: Coefficient>(
    sys: &CoxeterSystem,
    a: &HeckeElt<C>,
    b: &HeckeElt<C>,
) -> Result<HeckeElt<C>> {
    a.check_basis(b)?;
    a.require(Basis::Standard)?;
    let n = sys.order();
    let mut out = vec![LaurentPoly::<C>::zero(); n];
    let base = a.to_dense(n);
    for (u, f) in b.iter() {
        let mut cur = base.clone();
        for &s in sys.word_letters(u) {
            cur = dense_times_hs(sys, &cur, s as usize);
        }
        for (o, c) in out.iter_mut().zip(&cur) {
            if !c.is_zero() {
                *o += &(c * f);
            }
        }
    }
    Ok(HeckeElt::from_dense(Basis::Standard, out))
}

/// The ring involution `v -> v^-1`, `H_w -> H_{w^-1}^-1`, on a standard-basis element.
pub fn bar_involution<C: Coefficient>(sys: &CoxeterSystem, a: &HeckeElt<C>) -> Result<HeckeElt<C>> {
    a.require(Basis::Standard)?;
    let n = sys.order();
    let mut out = vec![LaurentPoly::<C>::zero(); n];
    for (w, f) in a.iter() {
        // bar(H_s) = H_s + (v - v^-1).
        let mut cur = vec![LaurentPoly::<C>::zero(); n];
        cur[0] = LaurentPoly::one();
        for &s in sys.word_letters(w) {
            let mut next = dense_times_hs(sys, &cur, s as usize);
            for (nx, c) in next.iter_mut().zip(&cur) {
                if !c.is_zero() {
                    nx.add_shifted(c, 1);
                    nx.sub_shifted(c, -1);
                }
            }
            cur = next;
        }
        let fb = f.bar();
        for (o, c) in out.iter_mut().zip(&cur) {
            if !c.is_zero() {
                *o += &(c * &fb);
            }
        }
    }
    Ok(HeckeElt::from_dense(Basis::Standard, out))
}

/// `C_w` expanded in the standard basis.
pub fn kl_basis<C: Coefficient>(table: &KlTable<C>, w: Element) -> HeckeElt<C> {
    HeckeElt::from_terms(Basis::Standard, table.column(w).entries.iter().cloned())
}

/// Rewrites an element in the standard basis, whatever its basis.
pub fn to_standard<C: Coefficient>(table: &KlTable<C>, a: &HeckeElt<C>) -> HeckeElt<C> {
    match a.basis {
        Basis::Standard => a.clone(),
        Basis::Kl => {
            let mut dense = vec![LaurentPoly::<C>::zero(); table.system().order()];
            for (w, f) in a.iter() {
                for (y, p) in &table.column(w).entries {
                    dense[y.index()] += &(p * f);
                }
            }
            HeckeElt::from_dense(Basis::Standard, dense)
        }
    }
}

/// Rewrites an element in the KL basis, whatever its basis.
pub fn to_kl_basis<C: Coefficient>(table: &KlTable<C>, a: &HeckeElt<C>) -> HeckeElt<C> {
    match a.basis {
        Basis::Kl => a.clone(),
        Basis::Standard => {
            let dense = a.to_dense(table.system().order());
            HeckeElt::from_dense(Basis::Kl, standard_to_kl_dense(table, dense))
        }
    }
}

/// Triangular conversion: peel off the largest surviving `H_w` with `C_w`.
pub(crate) fn standard_to_kl_dense<C: Coefficient>(
    table: &KlTable<C>,
    mut dense: Vec<LaurentPoly<C>>,
) -> Vec<LaurentPoly<C>> {
    let mut out = vec![LaurentPoly::<C>::zero(); dense.len()];
    for i in (0..dense.len()).rev() {
        if dense[i].is_zero() {
            continue;
        }
        let f = std::mem::take(&mut dense[i]);
        for (y, p) in &table.column(Element::from_index(i)).entries {
            if y.index() != i {
                dense[y.index()] -= &(p * &f);
            }
        }
        out[i] = f;
    }
    out
}

/// Structure constants `h_{x,y,z}` of `C_x C_y = sum_z h_{x,y,z} C_z`,
/// computed by multiplying in the standard basis and converting back.
pub fn h_constants<C: Coefficient>(table: &KlTable<C>, x: Element, y: Element) -> HeckeElt<C> {
    let sys = table.system();
    let prod = multiply_standard(sys, &kl_basis(table, x), &kl_basis(table, y))
        .expect("both factors are in the standard basis");
    to_kl_basis(table, &prod)
}
