use std::sync::{Arc, OnceLock};

use cellkit::asymptotic::Asymptotic;
use cellkit::cells::{compute_cells, AMode, CellDecomposition};
use cellkit::hecke::{bar_involution, h_constants, kl_basis, product_kl};
use cellkit::homology::{b_value, char_symmetry_check, nonzero_test, translated_simple_char};
use cellkit::{BigPoly, CartanType, CoxeterSystem, Element, KlTable};
use proptest::prelude::*;

struct Fixture {
    table: KlTable<i64>,
    cells: CellDecomposition,
}

fn fixture(ty: CartanType, n: usize) -> Fixture {
    let table = KlTable::new(Arc::new(CoxeterSystem::new(ty, n).unwrap()));
    let cells = compute_cells(&table, AMode::Full);
    Fixture { table, cells }
}

fn b3() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture(CartanType::B, 3))
}

fn b4() -> &'static KlTable<i64> {
    static T: OnceLock<KlTable<i64>> = OnceLock::new();
    T.get_or_init(|| KlTable::new(Arc::new(CoxeterSystem::new(CartanType::B, 4).unwrap())))
}

fn elt(order: usize) -> impl Strategy<Value = Element> {
    (0..order).prop_map(Element::from_index)
}

fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..14)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_multiply_like_the_group(a in word(4), b in word(4)) {
        let sys = b4().system();
        let eval = |w: &[usize]| w.iter().fold(sys.identity(), |acc, s| sys.rmul_gen(acc, *s));
        let (x, y) = (eval(&a), eval(&b));
        let joined: Vec<usize> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(sys.mul(x, y), eval(&joined));
        prop_assert_eq!(sys.inverse(sys.mul(x, y)), sys.mul(sys.inverse(y), sys.inverse(x)));
        prop_assert_eq!(sys.parse(&sys.word(x)).unwrap(), x);
        prop_assert_eq!(sys.word_letters(x).len() as u32, sys.length(x));
    }

    #[test]
    fn kl_polynomials_b4(w in elt(384), y in elt(384)) {
        let t = b4();
        let sys = t.system();
        let p = t.p(y, w);
        if y == w {
            prop_assert!(p.is_one());
        } else if !sys.bruhat_leq(y, w) {
            prop_assert!(p.is_zero());
        } else {
            prop_assert!(p.is_nonnegative());
            prop_assert!(p.min_degree().unwrap() >= 1);
            // parity: l(w) - l(y) + deg is even
            prop_assert!(p.terms().all(|(d, _)| (sys.length(w) as i32 - sys.length(y) as i32 + d) % 2 == 0));
            prop_assert!(p.degree().unwrap() <= (sys.length(w) - sys.length(y)) as i32);
        }
        let inv = t.p(sys.inverse(y), sys.inverse(w));
        prop_assert_eq!(inv, p);
    }

    #[test]
    fn kl_basis_is_bar_invariant_b4(w in elt(384)) {
        let t = b4();
        let c = kl_basis(t, w);
        prop_assert_eq!(bar_involution(t.system(), &c).unwrap(), c);
    }

    #[test]
    fn sweep_products_match_naive_b3(x in elt(48), y in elt(48)) {
        let t = &b3().table;
        prop_assert_eq!(product_kl(t, x, y), h_constants(t, x, y));
    }

    #[test]
    fn structure_constants_anti_involution(x in elt(48), y in elt(48), z in elt(48)) {
        let t = &b3().table;
        let sys = t.system();
        let lhs = product_kl(t, x, y).coeff(z);
        let rhs = product_kl(t, sys.inverse(y), sys.inverse(x)).coeff(sys.inverse(z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn character_symmetry_b3(x in elt(48), y in elt(48), z in elt(48)) {
        prop_assert!(char_symmetry_check(&b3().table, x, y, z));
    }

    #[test]
    fn nonvanishing_matches_cells(x in elt(48), y in elt(48)) {
        let f = b3();
        let ch = translated_simple_char(&f.table, x, y);
        prop_assert_eq!(!ch.is_zero(), nonzero_test(&f.cells, x, y));
        prop_assert_eq!(ch.b(), b_value(&f.table, x, y));
        let sys = f.table.system();
        for (z, _) in &ch.character {
            prop_assert!(f.cells.leq_r(*z, y), "{} not <=_R {}", sys.word(*z), sys.word(y));
        }
    }

    #[test]
    fn left_cells_share_a_and_tau(x in elt(48), y in elt(48)) {
        let f = b3();
        let sys = f.table.system();
        if f.cells.left().id(x) == f.cells.left().id(y) {
            prop_assert_eq!(f.cells.a_value(x), f.cells.a_value(y));
            prop_assert_eq!(sys.right_descents(x), sys.right_descents(y));
        }
    }

    #[test]
    fn gamma_cyclic_symmetry(x in elt(48), y in elt(48), z in elt(48)) {
        let f = b3();
        let asym = Asymptotic::new(&f.table, &f.cells);
        let g = asym.gamma(x, y, z);
        prop_assert_eq!(g, asym.gamma(y, z, x));
    }
}

#[test]
fn bigint_coefficients_agree_with_i64() {
    let sys = Arc::new(CoxeterSystem::new(CartanType::B, 3).unwrap());
    let small = KlTable::<i64>::new(Arc::clone(&sys));
    let big = KlTable::<num_bigint::BigInt>::new(sys);
    for w in small.system().elements() {
        for (y, p) in &small.column(w).entries {
            let q: BigPoly = big.p(*y, w);
            let back: Vec<(i32, i64)> = q
                .terms()
                .map(|(d, c)| (d, i64::try_from(c).unwrap()))
                .collect();
            let orig: Vec<(i32, i64)> = p.terms().map(|(d, c)| (d, *c)).collect();
            assert_eq!(back, orig);
        }
    }
}

#[test]
fn fast_a_values_agree_on_rank_three() {
    for (ty, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::C, 3)] {
        let t = KlTable::<i64>::new(Arc::new(CoxeterSystem::new(ty, n).unwrap()));
        let full = compute_cells(&t, AMode::Full);
        let fast = compute_cells(&t, AMode::Fast);
        assert_eq!(full.a_values(), fast.a_values(), "{ty}{n}");
    }
}
