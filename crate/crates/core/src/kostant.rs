//! Combinatorial classifiers for Kostant's problem and the cell reports.
//!
//! * `kh_bracket(y)`: the nonzero `theta_x L_y` have pairwise distinct
//!   graded characters.
//! * `km_proxy(y)`: `t_y t_{y^-1} = t_d` in the asymptotic ring.
//! * `k_conjectural(y)`: `km_proxy(y)` and `kh_bracket(d)` for the Duflo
//!   element `d` of the left cell of `y`. This equals `K(y)` provided that
//!   `K(d)` is equivalent to the character condition for Duflo elements `d`.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotic::Asymptotic;
use crate::cells::CellDecomposition;
use crate::coxeter::Element;
use crate::hecke::KlTable;
use crate::homology::{characters_for_x, Character};
use crate::poly::Coefficient;

/// The assumption under which `k_conjectural` computes `K`.
pub const CONDITIONAL_ON: &str =
    "for Duflo elements d, K(d) holds iff the nonzero modules theta_x L_d have pairwise distinct graded characters";

/// Character-injectivity data for every `y`.
#[derive(Clone, Debug)]
pub struct KhData {
    /// Injectivity of `x -> [theta_x L_y]` over `{x : x^-1 <=_L y}`.
    pub kh: Vec<bool>,
    /// Injectivity of `x -> (h_{z,x,y})_z` over `{x : x <=_R y}`.
    pub literal: Vec<bool>,
}

fn injective<'a, C: Coefficient>(chars: impl Iterator<Item = &'a Character<C>>) -> bool {
    let mut seen: HashMap<&Character<C>, ()> = HashMap::new();
    chars.into_iter().all(|ch| seen.insert(ch, ()).is_none())
}

/// Computes `kh_bracket` for every element, plus the variant indexed by
/// `x <=_R y` with characters `h_{z,x,y}`.
pub fn kh_data<C: Coefficient>(table: &KlTable<C>, cells: &CellDecomposition) -> KhData {
    let sys = table.system();
    let n = sys.order();
    table.precompute_all();
    let per_x: Vec<Vec<Character<C>>> = (0..n)
        .into_par_iter()
        .map(|x| characters_for_x(table, Element::from_index(x)))
        .collect();
    // by_y[y] = [theta_u L_y] for every u, indexed by u
    let mut by_y: Vec<Vec<Character<C>>> = vec![Vec::with_capacity(n); n];
    for chars in per_x {
        for (y, ch) in chars.into_iter().enumerate() {
            by_y[y].push(ch);
        }
    }
    let empty: Character<C> = Vec::new();
    let mut kh = Vec::with_capacity(n);
    let mut literal = Vec::with_capacity(n);
    for y in sys.elements() {
        let row = &by_y[y.index()];
        kh.push(injective(row.iter().filter(|ch| !ch.is_empty())));
        // h_{z,x,y} is the character of theta_{x^-1} L_y, so x <=_R y
        // becomes u = x^-1 <=_L y^-1.
        let yi = sys.inverse(y);
        literal.push(injective(
            sys.elements()
                .filter(|u| cells.leq_l(*u, yi))
                .map(|u| row.get(u.index()).unwrap_or(&empty)),
        ));
    }
    KhData { kh, literal }
}

/// `km_proxy(y)`: whether `t_y t_{y^-1}` is a single basis element.
pub fn km_proxy<C: Coefficient>(asym: &Asymptotic<'_, C>, y: Element) -> bool {
    asym.stabilizer_count(y).is_one()
}

/// Three-way coloring of the cell figures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    /// `k_conjectural`.
    Kostant,
    /// `km_proxy` holds, `kh_bracket` fails.
    KmNotKh,
    Neither,
}

impl Class {
    pub fn tag(self) -> &'static str {
        match self {
            Class::Kostant => "K",
            Class::KmNotKh => "KM",
            Class::Neither => "-",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementRecord {
    pub word: String,
    pub duflo: bool,
    pub kh_bracket: bool,
    pub km_proxy: bool,
    pub k_conjectural: bool,
    pub class: Class,
    pub left_cell: usize,
    pub right_cell: usize,
    pub two_sided_cell: usize,
    pub a: u32,
    pub stabilizer_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KostantReport {
    pub cartan_type: String,
    pub rank: usize,
    pub conditional_on: &'static str,
    pub elements: Vec<ElementRecord>,
    /// Duflo elements where the two indexings of the character condition disagree.
    pub indexing_discrepancies: Vec<String>,
}

impl KostantReport {
    pub fn record(&self, w: Element) -> &ElementRecord {
        &self.elements[w.index()]
    }
}

/// Classifies every element.
pub fn cell_report<C: Coefficient>(
    table: &KlTable<C>,
    cells: &CellDecomposition,
    asym: &Asymptotic<'_, C>,
) -> KostantReport {
    let sys = table.system();
    let kh = kh_data(table, cells);
    let elements = sys
        .elements()
        .map(|y| {
            let d = cells.left_duflo(y);
            let stab = asym.stabilizer(y);
            let km = stab
                .iter()
                .fold(C::zero(), |acc, (_, c)| acc + c.clone())
                .is_one();
            let kh_y = kh.kh[y.index()];
            let k = km && kh.kh[d.index()];
            let class = if k {
                Class::Kostant
            } else if km && !kh_y {
                Class::KmNotKh
            } else {
                Class::Neither
            };
            ElementRecord {
                word: sys.word(y),
                duflo: cells.is_duflo(y),
                kh_bracket: kh_y,
                km_proxy: km,
                k_conjectural: k,
                class,
                left_cell: cells.left().id(y),
                right_cell: cells.right().id(y),
                two_sided_cell: cells.two_sided().id(y),
                a: cells.a_value(y),
                stabilizer_size: stab.len(),
            }
        })
        .collect();
    let indexing_discrepancies = cells
        .duflo_elements()
        .filter(|d| kh.kh[d.index()] != kh.literal[d.index()])
        .map(|d| sys.word(d))
        .collect();
    KostantReport {
        cartan_type: sys.cartan_type().to_string(),
        rank: sys.rank(),
        conditional_on: CONDITIONAL_ON,
        elements,
        indexing_discrepancies,
    }
}

/// Left cells as rows, right cells as columns, one block per two-sided cell.
/// Each H-cell is printed as its members followed by the class tag, or with
/// per-element tags when the class is not constant on it.
pub fn render_grid(report: &KostantReport, cells: &CellDecomposition) -> String {
    let sys = cells.system();
    let mut out = cells.render_grid(|h| {
        let classes: Vec<Class> = h.iter().map(|w| report.record(*w).class).collect();
        if classes.windows(2).all(|p| p[0] == p[1]) {
            let words: Vec<String> = h.iter().map(|w| sys.word(*w)).collect();
            format!("{} [{}]", words.join(","), classes[0].tag())
        } else {
            h.iter()
                .map(|w| format!("{}[{}]", sys.word(*w), report.record(*w).class.tag()))
                .collect::<Vec<_>>()
                .join(",")
        }
    });
    let _ = writeln!(
        out,
        "K = k_conjectural, KM = km_proxy without kh_bracket, - = neither"
    );
    let _ = writeln!(out, "k_conjectural assumes: {CONDITIONAL_ON}");
    out
}

/// One row per element; columns as in [`TSV_HEADER`].
pub fn render_tsv(report: &KostantReport) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in &report.elements {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.word,
            r.duflo,
            r.kh_bracket,
            r.km_proxy,
            r.k_conjectural,
            r.class.tag(),
            r.left_cell,
            r.right_cell,
            r.two_sided_cell,
            r.a,
            r.stabilizer_size
        );
    }
    out
}

pub const TSV_HEADER: &str =
    "word\tduflo\tkh_bracket\tkm_proxy\tk_conjectural\tclass\tleft_cell\tright_cell\ttwo_sided_cell\ta\tstabilizer_size";
