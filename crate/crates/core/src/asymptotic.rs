//! The asymptotic ring: `t_x t_y = sum_z gamma_{x,y,z^-1} t_z`, where
//! `gamma_{x,y,z^-1}` is the coefficient of `v^a(z)` in `h_{x,y,z}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::cells::CellDecomposition;
use crate::coxeter::Element;
use crate::hecke::{FixedLeftSweep, KlTable};
use crate::poly::Coefficient;

/// A t-basis expansion, ascending by element.
pub type TExpansion<C = i64> = Vec<(Element, C)>;

/// Lazily computed products `t_x t_y`.
///
/// The first product with left factor `x` runs one fixed-left sweep and
/// keeps the top-degree parts of every `C_x C_w`.
pub struct Asymptotic<'a, C = i64> {
    table: &'a KlTable<C>,
    cells: &'a CellDecomposition,
    rows: Mutex<HashMap<Element, Arc<Vec<TExpansion<C>>>>>,
}

impl<'a, C: Coefficient> Asymptotic<'a, C> {
    pub fn new(table: &'a KlTable<C>, cells: &'a CellDecomposition) -> Self {
        Asymptotic {
            table,
            cells,
            rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn cells(&self) -> &CellDecomposition {
        self.cells
    }

    fn row(&self, x: Element) -> Arc<Vec<TExpansion<C>>> {
        if let Some(r) = self.rows.lock().unwrap().get(&x) {
            return Arc::clone(r);
        }
        let sweep = FixedLeftSweep::compute(self.table, x);
        let row: Vec<TExpansion<C>> = sweep
            .iter()
            .map(|(_, prod)| {
                prod.iter()
                    .filter_map(|(z, h)| {
                        let c = h.coeff(self.cells.a_value(*z) as i32);
                        (!c.is_zero()).then_some((*z, c))
                    })
                    .collect()
            })
            .collect();
        let row = Arc::new(row);
        self.rows
            .lock()
            .unwrap()
            .entry(x)
            .or_insert_with(|| Arc::clone(&row));
        row
    }

    /// `t_x t_y` in the t-basis.
    pub fn t_multiply(&self, x: Element, y: Element) -> TExpansion<C> {
        let two = self.cells.two_sided();
        if two.id(x) != two.id(y) {
            return Vec::new();
        }
        self.row(x)[y.index()].clone()
    }

    /// `gamma_{x,y,z}`: the coefficient of `t_{z^-1}` in `t_x t_y`.
    pub fn gamma(&self, x: Element, y: Element, z: Element) -> C {
        let target = self.cells.system().inverse(z);
        self.t_multiply(x, y)
            .into_iter()
            .find(|(w, _)| *w == target)
            .map(|(_, c)| c)
            .unwrap_or_else(C::zero)
    }

    /// Support of `t_y t_{y^-1}`, with multiplicities.
    pub fn stabilizer(&self, y: Element) -> TExpansion<C> {
        self.t_multiply(y, self.cells.system().inverse(y))
    }

    /// Summands of `theta_{y^-1} L_y`: pairs `(u, m)` such that
    /// `theta_{y^-1} L_y = sum_u theta_d L_u^{m}` with `d` the Duflo element
    /// of the right cell of `y`; the `m` are the coefficients of `t_y t_{y^-1}`.
    pub fn inverse_translate_summands(&self, y: Element) -> (Element, TExpansion<C>) {
        (self.cells.right_duflo(y), self.stabilizer(y))
    }

    /// Sum of the coefficients of `t_y t_{y^-1}`; equal to one exactly when
    /// the product is `t_d` for the Duflo element `d`.
    pub fn stabilizer_count(&self, y: Element) -> C {
        self.stabilizer(y)
            .into_iter()
            .fold(C::zero(), |acc, (_, c)| acc + c)
    }
}
