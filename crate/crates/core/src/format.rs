//! Text forms of the library's objects: multipartitions and charges as
//! command-line arguments, matrices as JSON, CSV or LaTeX.

use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::charge::Multicharge;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::{Entry, LabeledMatrix, Params};
use crate::partitions::{Multipartition, Partition};

/// Parses `[4,3,3,2,1]`.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let parts: Vec<usize> =
        serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse(format!("partition {s:?} is not weakly decreasing")));
    }
    Ok(Partition::new(parts))
}

/// Parses `[[2,1],[]]`.
pub fn parse_multipartition(s: &str) -> Result<Multipartition> {
    let comps: Vec<Vec<usize>> =
        serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("multipartition {s:?}: {e}")))?;
    if comps.is_empty() {
        return Err(Error::Parse("a multipartition needs at least one component".into()));
    }
    comps
        .into_iter()
        .map(|c| parse_partition(&serde_json::to_string(&c).expect("vector of integers")))
        .collect::<Result<Vec<_>>>()
        .map(Multipartition::new)
}

/// Parses `4,-3`.
pub fn parse_charge(s: &str) -> Result<Multicharge> {
    let entries = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("charge {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Multicharge::new(entries))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub n: i64,
    pub l: usize,
    pub m: usize,
    pub charge: Vec<i64>,
}

/// Sparse keyed form of a matrix: only nonzero entries, under `"row|col"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub params: ParamsDoc,
    pub order: Vec<String>,
    pub entries: BTreeMap<String, String>,
}

impl MatrixDoc {
    pub fn new<T: Entry + Display>(params: &Params, matrix: &LabeledMatrix<T>) -> Self {
        let entries = matrix
            .iter()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(r, c, v)| (format!("{r}|{c}"), v.to_string()))
            .collect();
        MatrixDoc {
            params: ParamsDoc {
                n: params.n,
                l: params.l,
                m: params.m,
                charge: params.charge.entries().to_vec(),
            },
            order: matrix.order().iter().map(ToString::to_string).collect(),
            entries,
        }
    }

    pub fn params(&self) -> Result<Params> {
        Params::new(
            self.params.n,
            self.params.l,
            Multicharge::new(self.params.charge.clone()),
            self.params.m,
        )
    }

    pub fn matrix<T>(&self) -> Result<LabeledMatrix<T>>
    where
        T: Entry + FromStr,
    {
        let order = self
            .order
            .iter()
            .map(|s| parse_multipartition(s))
            .collect::<Result<Vec<_>>>()?;
        let mut m = LabeledMatrix::filled(order, T::zero());
        for (key, value) in &self.entries {
            let (r, c) = key
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("entry key {key:?}")))?;
            let v = value
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("entry value {value:?}")))?;
            m.set(&parse_multipartition(r)?, &parse_multipartition(c)?, v)?;
        }
        Ok(m)
    }
}

pub fn to_json<T: Entry + Display>(params: &Params, matrix: &LabeledMatrix<T>) -> String {
    serde_json::to_string_pretty(&MatrixDoc::new(params, matrix)).expect("plain strings and integers")
}

pub fn from_json(s: &str) -> Result<MatrixDoc> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("matrix document: {e}")))
}

/// Dense CSV: a header of column keys, then one row per row key.
pub fn to_csv<T: Display + Clone>(matrix: &LabeledMatrix<T>) -> String {
    let mut out = csv::Writer::from_writer(Vec::new());
    let keys: Vec<String> = matrix.order().iter().map(ToString::to_string).collect();
    let header = std::iter::once(String::new()).chain(keys.iter().cloned());
    out.write_record(header).expect("in-memory writer");
    for (i, key) in keys.iter().enumerate() {
        let row = std::iter::once(key.clone()).chain((0..matrix.dim()).map(|j| matrix.at(i, j).to_string()));
        out.write_record(row).expect("in-memory writer");
    }
    String::from_utf8(out.into_inner().expect("in-memory writer")).expect("utf-8 input")
}

/// LaTeX rendering of a Laurent polynomial, e.g. `-q^{-1} + 2 + q^{3}`.
pub fn laurent_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().enumerate() {
        let negative = c.sign() == num_bigint::Sign::Minus;
        let magnitude = c.magnitude().to_string();
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let coeff = if magnitude == "1" && e != 0 { "" } else { magnitude.as_str() };
        match e {
            0 => out.push_str(coeff),
            1 => write!(out, "{coeff}q").expect("string"),
            _ => write!(out, "{coeff}q^{{{e}}}").expect("string"),
        }
    }
    out
}

fn partition_latex(p: &Partition) -> String {
    if p.is_empty() {
        return "\\emptyset".into();
    }
    let parts: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn multipartition_latex(mp: &Multipartition) -> String {
    let comps: Vec<String> = mp.components().iter().map(partition_latex).collect();
    format!("\\bigl( {} \\bigr)", comps.join(","))
}

/// Lower-triangular display with dots above the diagonal and the row keys
/// listed to the right, in the layout order of `matrix`.
pub fn to_latex<T: Clone>(matrix: &LabeledMatrix<T>, entry: impl Fn(&T) -> String) -> String {
    let dim = matrix.dim();
    let mut out = String::new();
    out.push_str("\\begin{array}{ll}\n \\left( \\begin{array}{");
    out.push_str(&"c".repeat(dim.max(1)));
    out.push_str("}\n");
    for i in 0..dim {
        let cells: Vec<String> = (0..dim)
            .map(|j| if j > i { ".".to_string() } else { entry(matrix.at(i, j)) })
            .collect();
        writeln!(out, " {} \\\\", cells.join(" & ")).expect("string");
    }
    out.push_str(" \\end{array} \\right)\n&\n \\begin{array}{l}\n");
    for key in matrix.order() {
        writeln!(out, " {} \\\\", multipartition_latex(key)).expect("string");
    }
    out.push_str(" \\end{array}\n\\end{array}\n");
    out
}
