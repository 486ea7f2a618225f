//! Finite stages of three Bratteli diagrams: Pascal's triangle, the
//! truncated Pascal triangle (the Temperley–Lieb tower), and the diagram
//! where vertex `i` feeds `2i, 2i+1, 2i+2`. Dimension vectors are path counts
//! from the root.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::report::Report;
use crate::tl::count_matchings;

/// Largest number of levels [`inclusion_check`] enumerates paths for.
pub const MAX_INCLUSION_LEVELS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    Pascal,
    TruncatedPascal,
    S11,
}

impl DiagramKind {
    pub fn name(self) -> &'static str {
        match self {
            DiagramKind::Pascal => "pascal",
            DiagramKind::TruncatedPascal => "truncated-pascal",
            DiagramKind::S11 => "s11",
        }
    }
}

impl FromStr for DiagramKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pascal" => Ok(DiagramKind::Pascal),
            "tl" | "truncated-pascal" => Ok(DiagramKind::TruncatedPascal),
            "s11" => Ok(DiagramKind::S11),
            other => Err(Error::Unsupported(format!("unknown diagram kind '{other}'"))),
        }
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Levels `0..levels` of a diagram, each with its multiplicity matrix into
/// the following level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    kind: DiagramKind,
    /// Vertex labels per level; for the Pascal family these are positions in
    /// Pascal's triangle, for `s11` plain indices.
    labels: Vec<Vec<usize>>,
    matrices: Vec<Vec<Vec<u32>>>,
}

fn level_labels(kind: DiagramKind, level: usize) -> Vec<usize> {
    match kind {
        DiagramKind::Pascal => (0..=level).collect(),
        // keep position p when 2p >= level - 1
        DiagramKind::TruncatedPascal => (0..=level).filter(|&p| 2 * p + 1 >= level).collect(),
        DiagramKind::S11 => (0..(1usize << (level + 1)) - 1).collect(),
    }
}

fn children(kind: DiagramKind, label: usize) -> Vec<usize> {
    match kind {
        DiagramKind::Pascal | DiagramKind::TruncatedPascal => vec![label, label + 1],
        DiagramKind::S11 => vec![2 * label, 2 * label + 1, 2 * label + 2],
    }
}

pub fn build_diagram(kind: DiagramKind, levels: usize) -> Result<BratteliDiagram> {
    if levels == 0 {
        return Err(Error::LevelOutOfRange { level: 0, built: 0 });
    }
    if kind == DiagramKind::S11 && levels > 24 {
        return Err(Error::Unsupported(format!("s11 with {levels} levels is too large")));
    }
    let labels: Vec<Vec<usize>> = (0..=levels).map(|l| level_labels(kind, l)).collect();
    let mut matrices = Vec::with_capacity(levels);
    for l in 0..levels {
        let next = &labels[l + 1];
        let m = labels[l]
            .iter()
            .map(|&v| {
                let kids = children(kind, v);
                next.iter().map(|w| kids.iter().filter(|&&k| k == *w).count() as u32).collect()
            })
            .collect();
        matrices.push(m);
    }
    let mut labels = labels;
    labels.truncate(levels);
    Ok(BratteliDiagram { kind, labels, matrices })
}

impl BratteliDiagram {
    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn levels(&self) -> usize {
        self.labels.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn labels(&self, level: usize) -> Result<&[usize]> {
        self.check_level(level)?;
        Ok(&self.labels[level])
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level >= self.levels() {
            return Err(Error::LevelOutOfRange { level, built: self.levels() });
        }
        Ok(())
    }

    /// Multiplicities from level `level` (rows) to level `level + 1` (columns).
    pub fn transition_matrix(&self, level: usize) -> Result<&[Vec<u32>]> {
        self.check_level(level)?;
        Ok(&self.matrices[level])
    }

    /// Every dimension vector from level 0 up to the last built level.
    pub fn dimension_vectors(&self) -> Vec<Vec<BigUint>> {
        let mut out = vec![vec![BigUint::one()]];
        for l in 1..self.levels() {
            let prev = &out[l - 1];
            let m = &self.matrices[l - 1];
            let next = (0..self.labels[l].len())
                .map(|j| prev.iter().zip(m).fold(BigUint::zero(), |acc, (d, row)| acc + d * row[j]))
                .collect();
            out.push(next);
        }
        out
    }

    pub fn dimension_vector(&self, level: usize) -> Result<Vec<BigUint>> {
        self.check_level(level)?;
        let mut all = self.dimension_vectors();
        all.truncate(level + 1);
        Ok(all.pop().expect("level 0 exists"))
    }

    /// `{"kind":…, "levels":[{"size":…, "dims":[…], "matrix":[[…]]}]}`.
    pub fn to_json_value(&self) -> Value {
        let dims = self.dimension_vectors();
        let levels: Vec<Value> = (0..self.levels())
            .map(|l| {
                let d: Vec<Value> = dims[l].iter().map(big_to_json).collect();
                json!({ "size": self.labels[l].len(), "dims": d, "matrix": self.matrices[l] })
            })
            .collect();
        json!({ "kind": self.kind.name(), "levels": levels })
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Rebuilds the diagram named in `text` and checks that every stored
    /// size, dimension and matrix agrees with it.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)?;
        let kind: DiagramKind = v["kind"]
            .as_str()
            .ok_or_else(|| Error::Json("missing \"kind\"".into()))?
            .parse()?;
        let levels = v["levels"].as_array().ok_or_else(|| Error::Json("missing \"levels\"".into()))?.len();
        let d = build_diagram(kind, levels)?;
        if d.to_json_value() != v {
            return Err(Error::Json("stored levels disagree with the rebuilt diagram".into()));
        }
        Ok(d)
    }
}

fn big_to_json(n: &BigUint) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("decimal digits"))
}

/// `C_0, ..., C_n` from `C_{k+1} = sum C_i C_{k-i}`.
pub fn catalan_numbers(n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for k in 0..n {
        let next = (0..=k).fold(BigUint::zero(), |acc, i| acc + &c[i] * &c[k - i]);
        c.push(next);
    }
    c
}

/// For every level `1 <= n <= levels`, the truncated-Pascal squares sum to
/// `C_{n+1}` and to the number of planar matchings on `n + 1` strands.
pub fn catalan_check(levels: usize) -> Report {
    let mut rep = Report::new("catalan");
    let d = match build_diagram(DiagramKind::TruncatedPascal, levels + 1) {
        Ok(d) => d,
        Err(e) => {
            rep.fail("build", e.to_string());
            return rep;
        }
    };
    let dims = d.dimension_vectors();
    let catalan = catalan_numbers(levels + 1);
    for n in 1..=levels {
        let squares = dims[n].iter().fold(BigUint::zero(), |acc, x| acc + x * x);
        let matchings = BigUint::from(count_matchings(n + 1));
        rep.check(
            format!("level {n}"),
            squares == catalan[n + 1] && squares == matchings,
            format!("sum of squares {squares}, C{} = {}, matchings {matchings}", n + 1, catalan[n + 1]),
        );
    }
    rep
}

/// Enumerates every path from the root in the truncated diagram, maps it
/// into Pascal's triangle through the vertex labels, and checks that the
/// images are Pascal paths and pairwise distinct.
pub fn inclusion_check(levels: usize) -> Report {
    let mut rep = Report::new("inclusion");
    if levels == 0 || levels > MAX_INCLUSION_LEVELS {
        rep.fail("levels", format!("{levels} is outside 1..={MAX_INCLUSION_LEVELS}"));
        return rep;
    }
    let (trunc, pascal) = match (
        build_diagram(DiagramKind::TruncatedPascal, levels + 1),
        build_diagram(DiagramKind::Pascal, levels + 1),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            rep.fail("build", e.to_string());
            return rep;
        }
    };

    // paths as sequences of vertex indices, one per level
    let mut paths: Vec<Vec<usize>> = vec![vec![0]];
    for l in 1..=levels {
        let mut images = BTreeSet::new();
        let mut all_edges = true;
        let mut next = Vec::new();
        for p in &paths {
            let last = *p.last().expect("non-empty");
            for (j, &m) in trunc.matrices[l - 1][last].iter().enumerate() {
                for _ in 0..m {
                    let mut q = p.clone();
                    q.push(j);
                    next.push(q);
                }
            }
        }
        for p in &next {
            let image: Vec<usize> = p.iter().enumerate().map(|(lv, &v)| trunc.labels[lv][v]).collect();
            // Pascal vertex index equals its label
            all_edges &= image.windows(2).enumerate().all(|(lv, w)| pascal.matrices[lv][w[0]][w[1]] > 0);
            images.insert(image);
        }
        let distinct = images.len() == next.len();
        let dims = trunc.dimension_vectors().swap_remove(l);
        let binom = pascal.dimension_vectors().swap_remove(l);
        let mapped: Vec<BigUint> = trunc.labels[l].iter().map(|&p| binom[p].clone()).collect();
        let bounded = dims.iter().zip(&mapped).all(|(a, b)| a <= b);
        rep.check(
            format!("level {l}"),
            all_edges && distinct && bounded,
            format!("{} paths, dims {} <= {}", next.len(), fmt_vec(&dims), fmt_vec(&mapped)),
        );
        paths = next;
    }
    rep
}

pub fn fmt_vec(v: &[BigUint]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}
