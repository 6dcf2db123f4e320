use super::{error_at, ErrorRow};
use crate::bounds::BoundKind;
use crate::error::{finite, Error, Result};
use crate::exec::Execution;

/// Abscissae of the published comparison table.
pub const TABLE_ABSCISSAE: [f64; 31] = [
    0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9, 2.1, 2.3, 2.5, 2.7, 2.9, 3.1, 3.3, 3.5, 3.7,
    3.9, 4.1, 4.4, 4.7, 5.0, 5.5, 6.0, 6.5, 7.0, 7.5, 8.0, 8.5,
];

/// h_U(x) for every (x, column) pair. Rows are stored x-major in column order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    abscissae: Vec<f64>,
    columns: Vec<BoundKind>,
    rows: Vec<ErrorRow>,
}

impl Table {
    pub fn abscissae(&self) -> &[f64] {
        &self.abscissae
    }

    pub fn columns(&self) -> &[BoundKind] {
        &self.columns
    }

    /// All cells, x-major.
    pub fn rows(&self) -> &[ErrorRow] {
        &self.rows
    }

    /// The cells of the `i`-th abscissa, in column order.
    pub fn line(&self, i: usize) -> &[ErrorRow] {
        let n = self.columns.len();
        &self.rows[i * n..(i + 1) * n]
    }

    pub fn cell(&self, i: usize, kind: BoundKind) -> Option<&ErrorRow> {
        let j = self.columns.iter().position(|k| *k == kind)?;
        self.rows.get(i * self.columns.len() + j)
    }
}

/// The comparison table over `xs` with the published column order
/// KO, AL, AB, NE, YA, BE, PO, EI.
pub fn make_table1(xs: &[f64]) -> Result<Table> {
    make_table(xs, &BoundKind::TABLE_COLUMNS, Execution::default())
}

pub fn make_table(xs: &[f64], columns: &[BoundKind], exec: Execution) -> Result<Table> {
    if xs.is_empty() {
        return Err(Error::InvalidGrid(
            "table needs at least one abscissa".into(),
        ));
    }
    if columns.is_empty() {
        return Err(Error::InvalidGrid("table needs at least one column".into()));
    }
    for &x in xs {
        finite("make_table", x)?;
        if x < 0.0 {
            return Err(Error::Domain {
                what: "make_table (x must be >= 0)",
                value: x,
            });
        }
    }
    let cells: Vec<(f64, BoundKind)> = xs
        .iter()
        .flat_map(|&x| columns.iter().map(move |&k| (x, k)))
        .collect();
    let rows = map_cells(exec, &cells)?;
    Ok(Table {
        abscissae: xs.to_vec(),
        columns: columns.to_vec(),
        rows,
    })
}

fn map_cells(exec: Execution, cells: &[(f64, BoundKind)]) -> Result<Vec<ErrorRow>> {
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            cells.par_iter().map(|&(x, k)| error_at(k, x)).collect()
        }
        _ => cells.iter().map(|&(x, k)| error_at(k, x)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_order() {
        let t = make_table1(&TABLE_ABSCISSAE).unwrap();
        assert_eq!(t.rows().len(), 31 * 8);
        let labels: Vec<_> = t.columns().iter().map(|k| k.label()).collect();
        assert_eq!(labels, ["KO", "AL", "AB", "NE", "YA", "BE", "PO", "EI"]);
        assert!(t.line(3).iter().all(|r| r.x == 0.7));
        assert_eq!(t.cell(0, BoundKind::EidousStar), None);
    }

    #[test]
    fn printed_cells() {
        let t = make_table1(&TABLE_ABSCISSAE).unwrap();
        let at = |x: f64| TABLE_ABSCISSAE.iter().position(|v| *v == x).unwrap();

        let ei = t.cell(at(2.9), BoundKind::Eidous).unwrap().error;
        assert!(((ei - 5.78e-5) / 5.78e-5).abs() < 0.02);
        let be = t.cell(at(0.1), BoundKind::Bercu).unwrap().error;
        assert!(be.abs() < 5e-3);
        let po = t.cell(at(8.5), BoundKind::Polya).unwrap().error;
        assert_eq!(po, 0.0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(make_table1(&[]).is_err());
        assert!(make_table1(&[-0.1]).is_err());
        assert!(make_table1(&[f64::NAN]).is_err());
        assert!(make_table(&[1.0], &[], Execution::Sequential).is_err());
    }
}
