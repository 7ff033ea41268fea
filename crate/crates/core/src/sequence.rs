//! Degree sequences: parsing, graphicality, complements and one-shot realization.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::MAX_VERTICES;

/// A nonincreasing list of nonnegative integers.
///
/// Its length is the number of vertices; the empty sequence is graphical
/// and realized by the empty graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Sorts `terms` into nonincreasing order.
    pub fn from_unsorted(mut terms: Vec<u32>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(terms)
    }

    /// Accepts `terms` only if already nonincreasing.
    pub fn from_nonincreasing(terms: Vec<u32>) -> Result<Self> {
        if terms.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::SequenceParse(format!(
                "{terms:?} is not nonincreasing"
            )));
        }
        Ok(DegreeSequence(terms))
    }

    pub fn uniform(value: u32, len: usize) -> Self {
        DegreeSequence(vec![value; len])
    }

    pub fn terms(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    /// Erdős–Gallai: even sum and, for every `1 <= k <= n`,
    /// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`.
    pub fn is_graphical(&self) -> bool {
        let d = &self.0;
        if !self.sum().is_multiple_of(2) {
            return false;
        }
        let mut prefix = 0u64;
        for k in 1..=d.len() {
            prefix += d[k - 1] as u64;
            let kk = k as u64;
            let tail: u64 = d[k..].iter().map(|&x| (x as u64).min(kk)).sum();
            if prefix > kk * (kk - 1) + tail {
                return false;
            }
        }
        true
    }

    pub(crate) fn require_graphical(&self) -> Result<()> {
        if self.is_graphical() {
            Ok(())
        } else {
            Err(Error::NotGraphical(self.to_string()))
        }
    }

    /// `{n - 1 - d_i}` sorted nonincreasing: the degree sequence of the
    /// complement of any realization.
    pub fn complement(&self) -> Result<Self> {
        self.require_graphical()?;
        let n = self.len() as u32;
        Ok(DegreeSequence::from_unsorted(
            self.0.iter().map(|&d| n - 1 - d).collect(),
        ))
    }

    /// One realization by Havel–Hakimi: repeatedly join the vertex of
    /// largest residual demand to the next largest demands.
    pub fn realize_one(&self) -> Result<Graph> {
        self.require_graphical()?;
        let n = self.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = Graph::empty(n)?;
        // vertex i targets terms[i]
        let mut residual: Vec<(u32, usize)> = self.0.iter().copied().zip(0..).collect();
        loop {
            residual.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let Some(&(demand, v)) = residual.first() else {
                break;
            };
            if demand == 0 {
                break;
            }
            residual[0].0 = 0;
            for slot in residual.iter_mut().skip(1).take(demand as usize) {
                debug_assert!(slot.0 > 0);
                slot.0 -= 1;
                g.set_edge(v, slot.1);
            }
        }
        Ok(g)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma-separated nonnegative integers in any order, e.g. `"1, 2,2"`.
/// Surrounding parentheses are accepted; the empty string is the empty sequence.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Ok(DegreeSequence::default());
        }
        let terms = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::SequenceParse(format!(
                        "{tok:?} is not a nonnegative integer"
                    )));
                }
                tok.parse::<u32>()
                    .map_err(|e| Error::SequenceParse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeSequence::from_unsorted(terms))
    }
}

impl From<DegreeSequence> for String {
    fn from(d: DegreeSequence) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for DegreeSequence {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(terms: Vec<u32>) -> Self {
        DegreeSequence::from_unsorted(terms)
    }
}
