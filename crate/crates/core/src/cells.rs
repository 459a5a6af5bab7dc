//! Left, right, two-sided and H-cells, the a-function and Duflo elements.
//!
//! Orders follow the convention `x <=_L y` iff `C_y` occurs in some
//! `C_z C_x`. Rows of the printed grids are left cells.

use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rayon::prelude::*;

use crate::coxeter::{CoxeterSystem, Element};
use crate::hecke::{product_kl, FixedLeftSweep, KlTable};
use crate::poly::Coefficient;

/// How [`compute_cells`] obtains the a-function.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AMode {
    /// Maximum degree of `h_{x,y,z}` over all pairs `(x,y)`.
    #[default]
    Full,
    /// Only the products `C_d C_d` for involutions `d`, taking the maximum
    /// over each two-sided cell. On rank <= 3 the full mode is run as well
    /// and the two must agree.
    Fast,
}

/// A partition of the group into classes, numbered by their smallest member.
#[derive(Clone, Debug)]
pub struct Partition {
    ids: Vec<u32>,
    classes: Vec<Vec<Element>>,
}

impl Partition {
    fn from_classes(n: usize, mut classes: Vec<Vec<Element>>) -> Self {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_unstable_by_key(|c| c[0]);
        let mut ids = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for w in c {
                ids[w.index()] = i as u32;
            }
        }
        Partition { ids, classes }
    }

    pub fn id(&self, w: Element) -> usize {
        self.ids[w.index()] as usize
    }

    pub fn class(&self, id: usize) -> &[Element] {
        &self.classes[id]
    }

    pub fn class_of(&self, w: Element) -> &[Element] {
        self.class(self.id(w))
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Reflexive-transitive closure of a preorder, stored per class as a bitset
/// over classes.
#[derive(Clone, Debug)]
struct Closure {
    above: Vec<Vec<u64>>,
}

impl Closure {
    fn new(part: &Partition, edges: &[Vec<Element>]) -> Self {
        let k = part.len();
        let words = k.div_ceil(64);
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (x, targets) in edges.iter().enumerate() {
            let cx = part.id(Element::from_index(x));
            for y in targets {
                let cy = part.id(*y);
                if cx != cy {
                    succ[cx].push(cy);
                }
            }
        }
        let mut above = vec![vec![0u64; words]; k];
        for (c, row) in above.iter_mut().enumerate() {
            let mut stack = vec![c];
            row[c / 64] |= 1 << (c % 64);
            while let Some(a) = stack.pop() {
                for &b in &succ[a] {
                    if row[b / 64] >> (b % 64) & 1 == 0 {
                        row[b / 64] |= 1 << (b % 64);
                        stack.push(b);
                    }
                }
            }
        }
        Closure { above }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a][b / 64] >> (b % 64) & 1 == 1
    }
}

/// Cells of a finite Weyl group together with a-values and Duflo elements.
pub struct CellDecomposition {
    system: Arc<CoxeterSystem>,
    left: Partition,
    right: Partition,
    two_sided: Partition,
    h: Partition,
    left_edges: Vec<Vec<Element>>,
    right_edges: Vec<Vec<Element>>,
    left_closure: Closure,
    right_closure: Closure,
    two_sided_closure: Closure,
    a: Vec<u32>,
    duflo: Vec<bool>,
    left_duflo: Vec<Element>,
}

/// Targets `y` of the generator edges `x -> y`, `C_y` in `C_s C_x`.
fn left_generator_edges<C: Coefficient>(table: &KlTable<C>, x: Element) -> Vec<Element> {
    let sys = table.system();
    let mut out = vec![x];
    for s in 0..sys.rank() {
        let sx = sys.lmul_gen(s, x);
        if sx < x {
            continue;
        }
        out.push(sx);
        for (z, _) in table.mu_below(x) {
            if sys.has_left_descent(*z, s) {
                out.push(*z);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn scc_partition(n: usize, edges: &[Vec<Element>]) -> Partition {
    let mut g = DiGraph::<(), ()>::with_capacity(n, 0);
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for (x, targets) in edges.iter().enumerate() {
        for y in targets {
            g.add_edge(nodes[x], nodes[y.index()], ());
        }
    }
    let classes = tarjan_scc(&g)
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|node| Element::from_index(node.index()))
                .collect()
        })
        .collect();
    Partition::from_classes(n, classes)
}

/// `a(z)` as the maximum degree of `h_{x,y,z}` over all `x, y`.
pub fn a_values_full<C: Coefficient>(table: &KlTable<C>) -> Vec<u32> {
    let sys = table.system();
    table.precompute_all();
    let n = sys.order();
    let best = (0..n)
        .into_par_iter()
        .fold(
            || vec![i32::MIN; n],
            |mut acc, x| {
                let sweep = FixedLeftSweep::compute(table, Element::from_index(x));
                for (_, prod) in sweep.iter() {
                    for (z, h) in prod {
                        let d = h.degree().expect("stored terms are nonzero");
                        let slot = &mut acc[z.index()];
                        *slot = (*slot).max(d);
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![i32::MIN; n],
            |a, b| a.into_iter().zip(b).map(|(p, q)| p.max(q)).collect(),
        );
    best.into_iter()
        .map(|d| u32::try_from(d).expect("every z occurs with a nonnegative degree"))
        .collect()
}

fn a_values_fast<C: Coefficient>(table: &KlTable<C>, two_sided: &Partition) -> Vec<u32> {
    let sys = table.system();
    let per_cell: Vec<u32> = two_sided
        .classes()
        .par_iter()
        .map(|cell| {
            cell.iter()
                .filter(|d| sys.is_involution(**d))
                .map(|&d| {
                    product_kl(table, d, d)
                        .coeff(d)
                        .degree()
                        .unwrap_or(0)
                        .max(0) as u32
                })
                .max()
                .expect("every two-sided cell contains an involution")
        })
        .collect();
    sys.elements().map(|w| per_cell[two_sided.id(w)]).collect()
}

/// Builds all cell data; see [`AMode`] for how the a-function is obtained.
pub fn compute_cells<C: Coefficient>(table: &KlTable<C>, mode: AMode) -> CellDecomposition {
    let sys = table.system();
    let n = sys.order();
    table.precompute_all();

    let left_edges: Vec<Vec<Element>> = (0..n)
        .into_par_iter()
        .map(|x| left_generator_edges(table, Element::from_index(x)))
        .collect();
    let mut right_edges: Vec<Vec<Element>> = vec![Vec::new(); n];
    for (x, targets) in left_edges.iter().enumerate() {
        let xi = sys.inverse(Element::from_index(x));
        let mut mapped: Vec<Element> = targets.iter().map(|y| sys.inverse(*y)).collect();
        mapped.sort_unstable();
        right_edges[xi.index()] = mapped;
    }
    let union_edges: Vec<Vec<Element>> = left_edges
        .iter()
        .zip(&right_edges)
        .map(|(l, r)| {
            let mut u: Vec<Element> = l.iter().chain(r).copied().collect();
            u.sort_unstable();
            u.dedup();
            u
        })
        .collect();

    let left = scc_partition(n, &left_edges);
    let right = Partition::from_classes(
        n,
        left.classes()
            .iter()
            .map(|c| c.iter().map(|w| sys.inverse(*w)).collect())
            .collect(),
    );
    let two_sided = scc_partition(n, &union_edges);
    let mut h_classes: std::collections::BTreeMap<(usize, usize), Vec<Element>> =
        Default::default();
    for w in sys.elements() {
        h_classes
            .entry((left.id(w), right.id(w)))
            .or_default()
            .push(w);
    }
    let h = Partition::from_classes(n, h_classes.into_values().collect());

    let left_closure = Closure::new(&left, &left_edges);
    let right_closure = Closure::new(&right, &right_edges);
    let two_sided_closure = Closure::new(&two_sided, &union_edges);

    let a = match mode {
        AMode::Full => a_values_full(table),
        AMode::Fast => {
            let fast = a_values_fast(table, &two_sided);
            if sys.rank() <= 3 {
                assert_eq!(
                    fast,
                    a_values_full(table),
                    "fast a-function disagrees with the full scan"
                );
            }
            fast
        }
    };

    let duflo: Vec<bool> = sys
        .elements()
        .map(|w| {
            let p = table.p(Element::IDENTITY, w);
            let low = p.min_degree().expect("p(e,w) is nonzero");
            let hit = low == a[w.index()] as i32;
            if hit {
                assert!(
                    p.coeff(low).is_one(),
                    "leading coefficient of p(e,{}) is not 1",
                    sys.word(w)
                );
            }
            hit
        })
        .collect();
    let left_duflo = left
        .classes()
        .iter()
        .map(|c| {
            let ds: Vec<Element> = c.iter().copied().filter(|w| duflo[w.index()]).collect();
            assert_eq!(
                ds.len(),
                1,
                "left cell of {} has {} Duflo elements",
                sys.word(c[0]),
                ds.len()
            );
            ds[0]
        })
        .collect();

    CellDecomposition {
        system: table.system_arc(),
        left,
        right,
        two_sided,
        h,
        left_edges,
        right_edges,
        left_closure,
        right_closure,
        two_sided_closure,
        a,
        duflo,
        left_duflo,
    }
}

impl CellDecomposition {
    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn left(&self) -> &Partition {
        &self.left
    }

    pub fn right(&self) -> &Partition {
        &self.right
    }

    pub fn two_sided(&self) -> &Partition {
        &self.two_sided
    }

    pub fn h(&self) -> &Partition {
        &self.h
    }

    /// Generator-step edges `x -> y` of the left preorder.
    pub fn left_edges(&self, x: Element) -> &[Element] {
        &self.left_edges[x.index()]
    }

    pub fn right_edges(&self, x: Element) -> &[Element] {
        &self.right_edges[x.index()]
    }

    pub fn leq_l(&self, x: Element, y: Element) -> bool {
        self.left_closure.leq(self.left.id(x), self.left.id(y))
    }

    pub fn leq_r(&self, x: Element, y: Element) -> bool {
        self.right_closure.leq(self.right.id(x), self.right.id(y))
    }

    pub fn leq_j(&self, x: Element, y: Element) -> bool {
        self.two_sided_closure
            .leq(self.two_sided.id(x), self.two_sided.id(y))
    }

    pub fn a_value(&self, z: Element) -> u32 {
        self.a[z.index()]
    }

    pub fn a_values(&self) -> &[u32] {
        &self.a
    }

    pub fn is_duflo(&self, w: Element) -> bool {
        self.duflo[w.index()]
    }

    /// The Duflo element of the left cell of `w`.
    pub fn left_duflo(&self, w: Element) -> Element {
        self.left_duflo[self.left.id(w)]
    }

    /// The Duflo element of the right cell of `w`.
    pub fn right_duflo(&self, w: Element) -> Element {
        let sys = &self.system;
        sys.inverse(self.left_duflo(sys.inverse(w)))
    }

    pub fn duflo_elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.system.elements().filter(|w| self.duflo[w.index()])
    }

    /// Whether the H-cell of `y` is as large as any H-cell in its two-sided cell.
    pub fn h_cell_max(&self, y: Element) -> bool {
        let size = self.h.class_of(y).len();
        let max = self
            .two_sided
            .class_of(y)
            .iter()
            .map(|w| self.h.class_of(*w).len())
            .max()
            .unwrap_or(0);
        size == max
    }

    /// Left cells inside a two-sided cell, in id order.
    pub fn left_cells_in(&self, two_sided_id: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self
            .two_sided
            .class(two_sided_id)
            .iter()
            .map(|w| self.left.id(*w))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// The two-sided cell as a grid of H-cells: row `i` is a left cell,
    /// column `i` is the right cell of that row's Duflo element, so Duflo
    /// elements sit on the diagonal. Each H-cell lists its Duflo element (if
    /// any) first, then the rest in canonical order.
    pub fn grid(&self, two_sided_id: usize) -> Vec<Vec<Vec<Element>>> {
        let sys = &self.system;
        let rows = self.left_cells_in(two_sided_id);
        let cols: Vec<usize> = rows
            .iter()
            .map(|&l| self.right.id(sys.inverse(self.left_duflo[l])))
            .collect();
        rows.iter()
            .map(|&l| {
                cols.iter()
                    .map(|&r| {
                        let mut members: Vec<Element> = self
                            .left
                            .class(l)
                            .iter()
                            .copied()
                            .filter(|w| self.right.id(*w) == r)
                            .collect();
                        members.sort_by_key(|w| (!self.is_duflo(*w), *w));
                        members
                    })
                    .collect()
            })
            .collect()
    }

    /// Renders every two-sided cell as a text grid, one line per left cell,
    /// with each H-cell formatted by `label`.
    pub fn render_grid(&self, label: impl Fn(&[Element]) -> String) -> String {
        let mut out = String::new();
        for id in 0..self.two_sided.len() {
            let rep = self.two_sided.class(id)[0];
            out.push_str(&format!(
                "two-sided cell {id} (a = {})\n",
                self.a_value(rep)
            ));
            let rendered: Vec<Vec<String>> = self
                .grid(id)
                .iter()
                .map(|row| row.iter().map(|h| label(h)).collect())
                .collect();
            let ncols = rendered.first().map_or(0, Vec::len);
            let widths: Vec<usize> = (0..ncols)
                .map(|j| {
                    rendered
                        .iter()
                        .map(|r| r[j].chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in &rendered {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}", w = *w))
                    .collect();
                out.push_str(&format!("  | {} |\n", padded.join(" | ")));
            }
        }
        out
    }

    pub fn right_cells_in(&self, two_sided_id: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self
            .two_sided
            .class(two_sided_id)
            .iter()
            .map(|w| self.right.id(*w))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CartanType;
    use crate::hecke::h_constants;

    fn build(ty: CartanType, n: usize) -> (KlTable<i64>, CellDecomposition) {
        let t = KlTable::new(Arc::new(CoxeterSystem::new(ty, n).unwrap()));
        let c = compute_cells(&t, AMode::Full);
        (t, c)
    }

    fn words(sys: &CoxeterSystem, cells: &Partition) -> Vec<Vec<String>> {
        cells
            .classes()
            .iter()
            .map(|c| c.iter().map(|w| sys.word(*w)).collect())
            .collect()
    }

    #[test]
    fn a1_cells() {
        let (t, c) = build(CartanType::A, 1);
        assert_eq!(words(t.system(), c.left()), vec![vec!["e"], vec!["1"]]);
        assert_eq!(c.a_values(), &[0, 1]);
    }

    #[test]
    fn a2_left_cells() {
        let (t, c) = build(CartanType::A, 2);
        let sys = t.system();
        assert_eq!(
            words(sys, c.left()),
            vec![vec!["e"], vec!["1", "21"], vec!["2", "12"], vec!["121"]]
        );
        let w = |s: &str| sys.parse(s).unwrap();
        assert!(c.leq_l(w("21"), w("1")) && c.leq_l(w("1"), w("21")));
        let duflo: Vec<String> = c.duflo_elements().map(|d| sys.word(d)).collect();
        assert_eq!(duflo, ["e", "1", "2", "121"]);
    }

    #[test]
    fn generator_edges_give_the_full_preorder() {
        for (ty, n) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::G, 2)] {
            let (t, c) = build(ty, n);
            let sys = t.system();
            let k = sys.order();
            // direct relation x -> y iff C_y occurs in some C_z C_x, then closure
            let mut rel = vec![vec![false; k]; k];
            for z in sys.elements() {
                for x in sys.elements() {
                    for y in h_constants(&t, z, x).support() {
                        rel[x.index()][y.index()] = true;
                    }
                }
            }
            for m in 0..k {
                for i in 0..k {
                    for j in 0..k {
                        if rel[i][m] && rel[m][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
            for x in sys.elements() {
                for y in sys.elements() {
                    assert_eq!(c.leq_l(x, y), rel[x.index()][y.index()]);
                }
            }
        }
    }

    #[test]
    fn right_edges_agree_with_right_multiplication() {
        let (t, c) = build(CartanType::B, 3);
        let sys = t.system();
        for x in sys.elements() {
            for s in 0..sys.rank() {
                let prod = h_constants(&t, x, sys.generator(s));
                for y in prod.support() {
                    assert!(c.leq_r(x, y));
                }
            }
        }
    }

    #[test]
    fn w0_twist_reverses_left_order() {
        let (t, c) = build(CartanType::A, 2);
        let sys = t.system();
        let w0 = sys.longest();
        for x in sys.elements() {
            for y in sys.elements() {
                assert_eq!(c.leq_l(x, y), c.leq_l(sys.mul(w0, y), sys.mul(w0, x)));
            }
        }
    }

    #[test]
    fn a_of_parabolic_longest_is_its_length() {
        let (t, c) = build(CartanType::A, 3);
        let sys = t.system();
        for bits in 0..(1u32 << 3) {
            let w = sys.longest_element(crate::coxeter::GenSet(bits));
            assert_eq!(c.a_value(w), sys.length(w));
        }
    }

    #[test]
    fn fast_mode_agrees() {
        for (ty, n) in [(CartanType::B, 3), (CartanType::G, 2), (CartanType::A, 3)] {
            let t = KlTable::<i64>::new(Arc::new(CoxeterSystem::new(ty, n).unwrap()));
            let fast = compute_cells(&t, AMode::Fast);
            assert_eq!(fast.a_values(), a_values_full(&t).as_slice());
        }
    }

    #[test]
    fn b3_examples() {
        let (t, c) = build(CartanType::B, 3);
        let sys = t.system();
        let w = |s: &str| sys.parse(s).unwrap();
        assert_eq!(c.a_value(w("2312312")), 3);
        assert!(c.is_duflo(w("2312")));
    }

    #[test]
    fn g2_h_cells() {
        let (t, c) = build(CartanType::G, 2);
        let sys = t.system();
        let w = |s: &str| sys.parse(s).unwrap();
        assert!(!c.h_cell_max(w("12")));
        assert!(c.h_cell_max(w("1")));
        assert_eq!(c.h().class_of(w("1")).len(), 3);
    }
}
