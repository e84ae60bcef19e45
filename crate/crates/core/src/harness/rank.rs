use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mean objective values, one row per problem and one column per algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankTable {
    pub problems: Vec<String>,
    pub algorithms: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl RankTable {
    /// CSV with a header `problem,<alg1>,<alg2>,…` and one row per problem.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let header = rdr.headers().map_err(csv_error)?.clone();
        if header.len() < 2 {
            return Err(Error::Config("rank table needs a problem column and an algorithm".into()));
        }
        let algorithms: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        let mut problems = Vec::new();
        let mut values = Vec::new();
        for row in rdr.records() {
            let row = row.map_err(csv_error)?;
            problems.push(row.get(0).unwrap_or_default().to_string());
            let parsed = row
                .iter()
                .skip(1)
                .map(|v| {
                    v.parse::<f64>()
                        .map_err(|_| Error::Config(format!("bad number {v:?} in row {}", problems.len())))
                })
                .collect::<Result<Vec<_>>>()?;
            values.push(parsed);
        }
        let table = Self { problems, algorithms, values };
        table.check()?;
        Ok(table)
    }

    pub fn from_csv_path(path: &Path) -> Result<Self> {
        Self::from_csv(std::fs::File::open(path)?)
    }

    fn check(&self) -> Result<()> {
        let k = self.algorithms.len();
        if let Some(i) = self.values.iter().position(|r| r.len() != k) {
            return Err(Error::Config(format!("row {} has {} values, expected {k}", i + 1, self.values[i].len())));
        }
        Ok(())
    }

    /// Friedman mean rank per algorithm, lower values ranked first.
    pub fn friedman(&self) -> Result<Vec<f64>> {
        self.check()?;
        friedman_rank(&self.values)
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Config(format!("csv: {e}"))
}

/// Ranks `1..=k` ascending by value, ties sharing the mean of their ranks.
pub fn average_ranks(row: &[f64]) -> Result<Vec<f64>> {
    if row.iter().any(|v| v.is_nan()) {
        return Err(Error::InvalidParameter("NaN entry in rank table".into()));
    }
    let mut order: Vec<usize> = (0..row.len()).collect();
    order.sort_by(|&a, &b| row[a].total_cmp(&row[b]));
    let mut ranks = vec![0.0; row.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && row[order[end]] == row[order[start]] {
            end += 1;
        }
        let shared = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = shared;
        }
        start = end;
    }
    Ok(ranks)
}

/// Mean over problems of each algorithm's per-problem rank.
pub fn friedman_rank(values: &[Vec<f64>]) -> Result<Vec<f64>> {
    let Some(first) = values.first() else {
        return Err(Error::InvalidParameter("empty rank table".into()));
    };
    let k = first.len();
    let mut totals = vec![0.0; k];
    for row in values {
        if row.len() != k {
            return Err(Error::InvalidParameter("ragged rank table".into()));
        }
        for (t, r) in totals.iter_mut().zip(average_ranks(row)?) {
            *t += r;
        }
    }
    Ok(totals.into_iter().map(|t| t / values.len() as f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order() {
        let v = vec![vec![1.0, 2.0], vec![0.5, 3.0], vec![-1.0, 0.0]];
        assert_eq!(friedman_rank(&v).unwrap(), vec![1.0, 2.0]);
    }

    #[test]
    fn ties_share_ranks() {
        assert_eq!(average_ranks(&[1.0, 1.0, 2.0]).unwrap(), vec![1.5, 1.5, 3.0]);
        assert_eq!(average_ranks(&[5.0, 5.0, 5.0]).unwrap(), vec![2.0, 2.0, 2.0]);
    }

    #[test]
    fn nan_is_an_error() {
        assert!(friedman_rank(&[vec![1.0, f64::NAN]]).is_err());
    }

    #[test]
    fn csv_round() {
        let t = RankTable::from_csv("problem,A,B\nf1,1,2\nf2, 3e0 ,2\n".as_bytes()).unwrap();
        assert_eq!(t.algorithms, vec!["A", "B"]);
        assert_eq!(t.friedman().unwrap(), vec![1.5, 1.5]);
        assert!(RankTable::from_csv("problem,A,B\nf1,1,x\n".as_bytes()).is_err());
        assert!(RankTable::from_csv("problem,A,B\nf1,1\n".as_bytes()).is_err());
    }
}
