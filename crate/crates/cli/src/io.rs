//! CSV input and output. Numbers are written in the shortest form that
//! parses back to the same `f64`.

use std::fs::File;
use std::path::Path;

use frontal_core::bertrand::MatePair;
use frontal_core::legendre::{CurvaturePair, LegendreCurve};
use frontal_core::plane::Vec2;

use crate::error::{CliError, Result};

pub const CURVE_HEADER: [&str; 3] = ["t", "x", "y"];
pub const LEGENDRE_HEADER: [&str; 5] = ["t", "x", "y", "nx", "ny"];
pub const MATE_HEADER: [&str; 8] = ["t", "x", "y", "nx", "ny", "lambda", "ell_bar", "beta_bar"];
pub const CURVATURE_HEADER: [&str; 3] = ["t", "ell", "beta"];

/// Shortest round-trip decimal.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveData {
    pub t: Vec<f64>,
    pub positions: Vec<Vec2<f64>>,
    pub normals: Option<Vec<Vec2<f64>>>,
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> CliError + '_ {
    move |source| CliError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads `t,x,y` or `t,x,y,nx,ny`.
pub fn read_curve_csv(path: &Path) -> Result<CurveData> {
    let file = File::open(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(file);
    let header: Vec<String> = rdr.headers().map_err(csv_err(path))?.iter().map(str::to_string).collect();
    let with_normals = if header == LEGENDRE_HEADER {
        true
    } else if header == CURVE_HEADER {
        false
    } else {
        return Err(CliError::Usage(format!(
            "{}: header must be `t,x,y` or `t,x,y,nx,ny`, got `{}`",
            path.display(),
            header.join(",")
        )));
    };
    let mut data = CurveData {
        t: Vec::new(),
        positions: Vec::new(),
        normals: with_normals.then(Vec::new),
    };
    for (row, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(csv_err(path))?;
        let vals: Vec<f64> = rec
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| CliError::Usage(format!("{}: row {}: not a number", path.display(), row + 2)))?;
        data.t.push(vals[0]);
        data.positions.push(Vec2::new(vals[1], vals[2]));
        if let Some(n) = data.normals.as_mut() {
            n.push(Vec2::new(vals[3], vals[4]));
        }
    }
    Ok(data)
}

fn write_rows<'a>(path: &Path, header: &[&str], rows: impl Iterator<Item = Vec<f64>> + 'a) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(header).map_err(csv_err(path))?;
    for row in rows {
        w.write_record(row.into_iter().map(num)).map_err(csv_err(path))?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// `t,x,y,nx,ny` on the grid.
pub fn write_legendre_csv(path: &Path, lc: &LegendreCurve<f64>) -> Result<()> {
    let rows = lc.grid().into_iter().map(|t| {
        let (p, n) = (lc.position(t), lc.nu(t));
        vec![t, p.x, p.y, n.x, n.y]
    });
    write_rows(path, &LEGENDRE_HEADER, rows)
}

/// `t,x,y,nx,ny,lambda,ell_bar,beta_bar` on the mate grid.
pub fn write_mate_csv(path: &Path, mp: &MatePair<f64>) -> Result<()> {
    let grid = mp.mate.grid();
    let rows = grid.into_iter().enumerate().map(|(i, t)| {
        let (p, n) = (mp.mate.position(t), mp.mate.nu(t));
        vec![
            t,
            p.x,
            p.y,
            n.x,
            n.y,
            mp.lambda.lambda[i],
            mp.mate_curvature.ell[i],
            mp.mate_curvature.beta[i],
        ]
    });
    write_rows(path, &MATE_HEADER, rows)
}

pub fn write_curvature_csv(path: &Path, cp: &CurvaturePair<f64>) -> Result<()> {
    let rows = (0..cp.len()).map(|i| vec![cp.grid[i], cp.ell[i], cp.beta[i]]);
    write_rows(path, &CURVATURE_HEADER, rows)
}

/// Columns of equal length under `header`.
pub fn write_columns(path: &Path, header: &[&str], columns: &[&[f64]]) -> Result<()> {
    let n = columns.first().map_or(0, |c| c.len());
    let rows = (0..n).map(|i| columns.iter().map(|c| c[i]).collect());
    write_rows(path, header, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, 0.0] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(num(0.1), "0.1");
    }
}
