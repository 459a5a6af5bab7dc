//! Graded characters of translated simple modules `theta_x L_y`, with
//! `[theta_x L_y : L_z] = h_{z,x^-1,y}`, and the homological invariants
//! derived from them.

use std::fmt;

use rayon::prelude::*;

use crate::cells::CellDecomposition;
use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::error::{Error, Result};
use crate::hecke::{FixedLeftSweep, KlTable};
use crate::poly::{Coefficient, LaurentPoly};

/// A graded character: `(z, [M : L_z])` ascending by `z`, nonzero entries only.
pub type Character<C = i64> = Vec<(Element, LaurentPoly<C>)>;

/// An integer or minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    NegInfinity,
    Finite(i32),
}

impl Extended {
    pub fn finite(self) -> Option<i32> {
        match self {
            Extended::Finite(n) => Some(n),
            Extended::NegInfinity => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInfinity => write!(f, "-inf"),
            Extended::Finite(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone)]
pub struct TranslatedSimpleChar<C = i64> {
    pub x: Element,
    pub y: Element,
    pub character: Character<C>,
}

impl<C: Coefficient> TranslatedSimpleChar<C> {
    pub fn is_zero(&self) -> bool {
        self.character.is_empty()
    }

    /// Largest degree occurring in the character.
    pub fn b(&self) -> Extended {
        max_degree(&self.character)
    }

    pub fn get(&self, z: Element) -> LaurentPoly<C> {
        self.character
            .binary_search_by_key(&z, |e| e.0)
            .map(|i| self.character[i].1.clone())
            .unwrap_or_default()
    }

    /// Composition factors grouped by degree: `(degree, [(z, multiplicity)])`,
    /// degrees ascending, factors in canonical order.
    pub fn by_degree(&self) -> Vec<(i32, Vec<(Element, C)>)> {
        let mut degrees: std::collections::BTreeMap<i32, Vec<(Element, C)>> = Default::default();
        for (z, p) in &self.character {
            for (d, c) in p.terms() {
                degrees.entry(d).or_default().push((*z, c.clone()));
            }
        }
        degrees.into_iter().collect()
    }
}

fn max_degree<C: Coefficient>(ch: &Character<C>) -> Extended {
    ch.iter()
        .filter_map(|(_, p)| p.degree())
        .max()
        .map(Extended::Finite)
        .unwrap_or(Extended::NegInfinity)
}

/// Characters of `theta_x L_y` for one `x` and every `y`, indexed by `y`.
///
/// Uses `h_{z,x^-1,y} = h_{x,z^-1,y^-1}`, so a single sweep with left factor
/// `x` covers all `y` and `z`.
pub fn characters_for_x<C: Coefficient>(table: &KlTable<C>, x: Element) -> Vec<Character<C>> {
    let sys = table.system();
    let sweep = FixedLeftSweep::compute(table, x);
    let mut out: Vec<Character<C>> = vec![Vec::new(); sys.order()];
    for (w, prod) in sweep.iter() {
        let z = sys.inverse(w);
        for (u, h) in prod {
            out[sys.inverse(*u).index()].push((z, h.clone()));
        }
    }
    for ch in &mut out {
        ch.sort_unstable_by_key(|e| e.0);
    }
    out
}

/// Graded character of `theta_x L_y`.
pub fn translated_simple_char<C: Coefficient>(
    table: &KlTable<C>,
    x: Element,
    y: Element,
) -> TranslatedSimpleChar<C> {
    let sys = table.system();
    let sweep = FixedLeftSweep::compute(table, x);
    let target = sys.inverse(y);
    let mut character: Character<C> = sweep
        .iter()
        .filter_map(|(w, prod)| {
            prod.binary_search_by_key(&target, |e| e.0)
                .ok()
                .map(|i| (sys.inverse(w), prod[i].1.clone()))
        })
        .collect();
    character.sort_unstable_by_key(|e| e.0);
    TranslatedSimpleChar { x, y, character }
}

/// `b(x,y)`: the top degree of the character of `theta_x L_y`.
pub fn b_value<C: Coefficient>(table: &KlTable<C>, x: Element, y: Element) -> Extended {
    translated_simple_char(table, x, y).b()
}

/// `b(x,y)` for every pair, as `b[x][y]`.
pub fn b_table<C: Coefficient>(table: &KlTable<C>) -> Vec<Vec<Extended>> {
    let n = table.system().order();
    table.precompute_all();
    (0..n)
        .into_par_iter()
        .map(|x| {
            characters_for_x(table, Element::from_index(x))
                .iter()
                .map(max_degree)
                .collect()
        })
        .collect()
}

/// Whether `theta_x L_y` is nonzero, i.e. `x^-1 <=_L y`.
pub fn nonzero_test(cells: &CellDecomposition, x: Element, y: Element) -> bool {
    cells.leq_l(cells.system().inverse(x), y)
}

/// Projective dimension `a(w0 x) + b(y^-1 w0, w0 x^-1)` of a nonzero `theta_x L_y`.
pub fn proj_dim<C: Coefficient>(
    table: &KlTable<C>,
    cells: &CellDecomposition,
    x: Element,
    y: Element,
) -> Result<u32> {
    let sys = cells.system();
    if !nonzero_test(cells, x, y) {
        return Err(Error::Domain(format!(
            "theta_{} L_{} is zero, its projective dimension is undefined",
            sys.word(x),
            sys.word(y)
        )));
    }
    let w0 = sys.longest();
    let dual_x = sys.mul(sys.inverse(y), w0);
    let dual_y = sys.mul(w0, sys.inverse(x));
    let b = b_value(table, dual_x, dual_y)
        .finite()
        .expect("the Koszul dual of a nonzero module is nonzero");
    Ok(cells.a_value(sys.mul(w0, x)) + b as u32)
}

/// Graded length `2 b(x,y)`; minus infinity for the zero module.
pub fn graded_length<C: Coefficient>(table: &KlTable<C>, x: Element, y: Element) -> Extended {
    match b_value(table, x, y) {
        Extended::Finite(b) => Extended::Finite(2 * b),
        Extended::NegInfinity => Extended::NegInfinity,
    }
}

/// Projective dimension of the singular simple `L(w . lambda)` whose
/// stabilizer is the `w0`-conjugate of the parabolic subgroup on `subset`:
/// `b(x,y) + a(y)` with `y = w0 w0^p`, `x = w^-1 w0`.
///
/// `w` must be the longest representative of its coset `w W_p`.
pub fn singular_projdim<C: Coefficient>(
    table: &KlTable<C>,
    cells: &CellDecomposition,
    subset: GenSet,
    w: Element,
) -> Result<u32> {
    let sys: &CoxeterSystem = cells.system();
    if !subset.is_subset(sys.right_descents(w)) {
        return Err(Error::Domain(format!(
            "{} is not the longest element of its coset for the parabolic subgroup on {{{}}}",
            sys.word(w),
            subset
                .iter()
                .map(|s| (s + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        )));
    }
    let w0 = sys.longest();
    let y = sys.mul(w0, sys.longest_element(subset));
    let x = sys.mul(sys.inverse(w), w0);
    let b = b_value(table, x, y)
        .finite()
        .expect("longest coset representatives give nonzero modules");
    Ok(b as u32 + cells.a_value(y))
}

/// Checks `[theta_x L_y : L_z<i>] = [theta_z L_{y^-1} : L_x<i>]`.
pub fn char_symmetry_check<C: Coefficient>(
    table: &KlTable<C>,
    x: Element,
    y: Element,
    z: Element,
) -> bool {
    let sys = table.system();
    translated_simple_char(table, x, y).get(z)
        == translated_simple_char(table, z, sys.inverse(y)).get(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{compute_cells, AMode};
    use crate::coxeter::CartanType;
    use crate::hecke::h_constants;
    use std::sync::Arc;

    type P = LaurentPoly<i64>;

    fn build(ty: CartanType, n: usize) -> (KlTable<i64>, CellDecomposition) {
        let t = KlTable::new(Arc::new(CoxeterSystem::new(ty, n).unwrap()));
        let c = compute_cells(&t, AMode::Full);
        (t, c)
    }

    #[test]
    fn characters_match_direct_products() {
        let (t, _) = build(CartanType::B, 2);
        let sys = t.system();
        for x in sys.elements() {
            let xi = sys.inverse(x);
            let all = characters_for_x(&t, x);
            for y in sys.elements() {
                let ch = translated_simple_char(&t, x, y);
                assert_eq!(ch.character, all[y.index()]);
                for z in sys.elements() {
                    assert_eq!(ch.get(z), h_constants(&t, z, xi).coeff(y));
                }
            }
        }
    }

    #[test]
    fn a2_character_of_theta_1_l_1() {
        let (t, _) = build(CartanType::A, 2);
        let sys = t.system();
        let s = sys.parse("1").unwrap();
        let ch = translated_simple_char(&t, s, s);
        let expected = vec![
            (Element::IDENTITY, P::one()),
            (s, P::quantum_two()),
            (sys.parse("12").unwrap(), P::one()),
        ];
        assert_eq!(ch.character, expected);
    }

    #[test]
    fn identity_translation() {
        let (t, _) = build(CartanType::A, 2);
        for y in t.system().elements() {
            let ch = translated_simple_char(&t, Element::IDENTITY, y);
            assert_eq!(ch.character, vec![(y, P::one())]);
            assert_eq!(graded_length(&t, Element::IDENTITY, y), Extended::Finite(0));
        }
    }

    #[test]
    fn nonvanishing_matches_cells() {
        for (ty, n) in [(CartanType::A, 3), (CartanType::G, 2)] {
            let (t, c) = build(ty, n);
            let sys = t.system();
            for x in sys.elements() {
                let all = characters_for_x(&t, x);
                for y in sys.elements() {
                    assert_eq!(!all[y.index()].is_empty(), nonzero_test(&c, x, y));
                }
            }
        }
        let (t, c) = build(CartanType::G, 2);
        let sys = t.system();
        assert!(!nonzero_test(
            &c,
            sys.parse("2").unwrap(),
            sys.parse("1").unwrap()
        ));
        assert_eq!(
            graded_length(&t, sys.parse("2").unwrap(), sys.parse("1").unwrap()),
            Extended::NegInfinity
        );
    }

    #[test]
    fn projective_dimensions() {
        let (t, c) = build(CartanType::A, 2);
        let sys = t.system();
        let s = sys.parse("1").unwrap();
        assert_eq!(proj_dim(&t, &c, s, s).unwrap(), 2);
        let w0 = sys.longest();
        assert_eq!(proj_dim(&t, &c, w0, w0).unwrap(), 0);
        assert!(matches!(
            proj_dim(&t, &c, sys.parse("2").unwrap(), s),
            Err(Error::Domain(_))
        ));
        // simple modules: 2 l(w0) - l(w)
        for w in sys.elements() {
            assert_eq!(
                proj_dim(&t, &c, Element::IDENTITY, w).unwrap(),
                6 - sys.length(w)
            );
        }
    }

    #[test]
    fn singular_projdim_extremes() {
        let (t, c) = build(CartanType::A, 2);
        let sys = t.system();
        for w in sys.elements() {
            assert_eq!(
                singular_projdim(&t, &c, GenSet(0), w).unwrap(),
                proj_dim(&t, &c, Element::IDENTITY, w).unwrap()
            );
        }
        assert_eq!(
            singular_projdim(&t, &c, GenSet(0b11), sys.longest()).unwrap(),
            0
        );
        assert!(matches!(
            singular_projdim(&t, &c, GenSet(0b11), Element::IDENTITY),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            singular_projdim(&t, &c, GenSet(0b01), sys.parse("2").unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn b3_section_example() {
        let (t, c) = build(CartanType::B, 3);
        let sys = t.system();
        let x = sys.parse("2312312").unwrap();
        let y = sys.parse("231232").unwrap();
        assert_eq!(b_value(&t, x, y), Extended::Finite(3));
        assert_eq!(c.a_value(x), 3);
    }
}
