//! Seeds, exchange matrices and mutation.
//!
//! Directions are 0-based throughout the library (`k = 0` mutates `x1`); the
//! CLI accepts 1-based directions and converts.
//!
//! Rank-2 recurrences follow the labelling in which `x1, x2` are free and
//! `x_{i-1} x_{i+1} = 1 + x_i^b` for odd `i`, `1 + x_i^c` for even `i`. With
//! `b = c = 2` this reproduces `x3 = (x2^2+1)/x1` and
//! `x4 = (x1^2+(x2^2+1)^2)/(x1^2 x2)`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};
use crate::report::Report;

/// Skew-symmetric integer matrix `B = (b_ij)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        let m = Self { n, entries };
        for i in 0..n {
            for j in 0..n {
                if m.get(i, j) != -m.get(j, i) {
                    return Err(Error::InvalidMatrix(format!("b[{i}][{j}] != -b[{j}][{i}]")));
                }
            }
        }
        Ok(m)
    }

    /// A uniformly random skew-symmetric matrix with entries in `-bound..=bound`.
    pub fn random<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-bound..=bound);
                entries[i * n + j] = v;
                entries[j * n + i] = -v;
            }
        }
        Self { n, entries }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(s)?;
        Self::new(rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// Matrix mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::IndexOutOfRange { index: k, len: self.n });
        }
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let b = self.get(i, j);
                entries[i * n + j] = if i == k || j == k {
                    -b
                } else {
                    let (bik, bkj) = (self.get(i, k), self.get(k, j));
                    b + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
            }
        }
        Ok(Self { n, entries })
    }
}

impl TryFrom<Vec<Vec<i64>>> for ExchangeMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<ExchangeMatrix> for Vec<Vec<i64>> {
    fn from(m: ExchangeMatrix) -> Self {
        m.rows()
    }
}

/// Exchange matrix of the ideal triangulations used here: the sphere with two
/// cusps `(0, 2)` and the once-punctured torus `(1, 1)`.
pub fn triangulation_matrix(genus: u32, cusps: u32) -> Result<ExchangeMatrix> {
    let rows = match (genus, cusps) {
        (0, 2) => vec![vec![0, 2], vec![-2, 0]],
        (1, 1) => vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]],
        _ => return Err(Error::Unsupported(format!("no triangulation matrix for S_({genus},{cusps})"))),
    };
    ExchangeMatrix::new(rows)
}

/// A cluster of Laurent polynomials in the initial variables together with
/// its exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    cluster: Vec<LaurentPoly>,
    matrix: ExchangeMatrix,
}

impl Seed {
    /// The initial seed `((x1, ..., xn), B)`.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let n = matrix.size();
        let cluster = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
        Self { cluster, matrix }
    }

    pub fn new(cluster: Vec<LaurentPoly>, matrix: ExchangeMatrix) -> Result<Self> {
        let n = matrix.size();
        if cluster.len() != n {
            return Err(Error::ArityMismatch { left: n, right: cluster.len() });
        }
        for x in &cluster {
            if x.arity() != n {
                return Err(Error::ArityMismatch { left: n, right: x.arity() });
            }
            if x.is_zero() {
                return Err(Error::InvalidMatrix("cluster entries must be nonzero".into()));
            }
            if !x.has_integral_exponents() {
                return Err(Error::NonIntegralExponent { index: 0 });
            }
        }
        Ok(Self { cluster, matrix })
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.size()
    }

    /// The two monomials of the exchange relation in direction `k`.
    pub fn exchange_monomials(&self, k: usize) -> (LaurentPoly, LaurentPoly) {
        let n = self.rank();
        let mut plus = LaurentPoly::one(n);
        let mut minus = LaurentPoly::one(n);
        for (i, x) in self.cluster.iter().enumerate() {
            let b = self.matrix.get(i, k);
            if b > 0 {
                plus = &plus * &x.pow(b as u32);
            } else if b < 0 {
                minus = &minus * &x.pow((-b) as u32);
            }
        }
        (plus, minus)
    }

    /// Seed mutation in direction `k`. A failed exact division is reported as
    /// [`Error::LaurentPhenomenonViolation`].
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let matrix = self.matrix.mutate(k)?;
        let (plus, minus) = self.exchange_monomials(k);
        let new = (&plus + &minus).div_exact(&self.cluster[k]).map_err(|e| match e {
            Error::NotDivisible => Error::LaurentPhenomenonViolation { prefix: vec![k] },
            other => other,
        })?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new;
        Ok(Seed { cluster, matrix })
    }

    /// Applies `walk` in order; errors carry the offending prefix.
    pub fn mutate_walk(&self, walk: &[usize]) -> Result<Seed> {
        let mut s = self.clone();
        for (step, &k) in walk.iter().enumerate() {
            s = s.mutate(k).map_err(|e| match e {
                Error::LaurentPhenomenonViolation { .. } => {
                    Error::LaurentPhenomenonViolation { prefix: walk[..=step].to_vec() }
                }
                other => other,
            })?;
        }
        Ok(s)
    }
}

/// `x1, ..., x_count` of the rank-2 recurrence with exponents `(b, c)`.
pub fn rank2_sequence(b: u32, c: u32, count: usize) -> Result<Vec<LaurentPoly>> {
    if b == 0 || c == 0 {
        return Err(Error::Unsupported("rank-2 exponents must be positive".into()));
    }
    if count < 2 {
        return Err(Error::Unsupported("need at least the two initial variables".into()));
    }
    let mut xs = vec![LaurentPoly::var(2, 0), LaurentPoly::var(2, 1)];
    while xs.len() < count {
        // xs[i-1] is x_i in 1-based labels
        let i = xs.len();
        let e = if i % 2 == 1 { b } else { c };
        let numer = &LaurentPoly::one(2) + &xs[i - 1].pow(e);
        let next = numer.div_exact(&xs[i - 2]).map_err(|err| match err {
            Error::NotDivisible => Error::LaurentPhenomenonViolation { prefix: (1..=i + 1).collect() },
            other => other,
        })?;
        xs.push(next);
    }
    Ok(xs)
}

/// One produced cluster variable in a Laurent-phenomenon run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableRecord {
    pub label: String,
    pub value: LaurentPoly,
    /// Whole exponents of the monomial denominator.
    pub denominator: Vec<i64>,
    pub laurent: bool,
    /// The exchange relation re-checked by multiplication.
    pub exchange_holds: bool,
    pub positive: bool,
}

impl VariableRecord {
    fn new(label: String, value: LaurentPoly, exchange_holds: bool) -> Self {
        let denominator = value.denominator_vector().half_units().iter().map(|h| h / 2).collect();
        Self {
            label,
            laurent: value.has_integral_exponents() && !value.is_zero(),
            positive: value.all_coefficients_positive(),
            denominator,
            value,
            exchange_holds,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LaurentCheck {
    pub name: String,
    pub records: Vec<VariableRecord>,
    pub require_positive: bool,
}

impl LaurentCheck {
    pub fn all_laurent(&self) -> bool {
        self.records.iter().all(|r| r.laurent && r.exchange_holds)
    }

    pub fn all_positive(&self) -> bool {
        self.records.iter().all(|r| r.positive)
    }

    pub fn to_report(&self) -> Report {
        let vars = Vars::cluster(self.records.first().map_or(0, |r| r.value.arity()));
        let mut rep = Report::new(self.name.clone());
        if self.records.is_empty() {
            rep.pass("walk", "empty walk: cluster is the initial variables");
        }
        for r in &self.records {
            let positivity = if r.positive { "positive" } else { "has non-positive coefficients" };
            let detail = format!("{}; denominator {:?}; {positivity}", vars.format_fraction(&r.value), r.denominator);
            let ok = r.laurent && r.exchange_holds && (r.positive || !self.require_positive);
            rep.check(r.label.clone(), ok, detail);
        }
        rep
    }
}

/// Mutates along `walk` and records every produced variable.
pub fn laurent_phenomenon_check(seed: &Seed, walk: &[usize], require_positive: bool) -> Result<LaurentCheck> {
    let mut records = Vec::with_capacity(walk.len());
    let mut s = seed.clone();
    for (step, &k) in walk.iter().enumerate() {
        let (plus, minus) = s.exchange_monomials(k);
        let old = s.cluster[k].clone();
        s = s.mutate(k).map_err(|e| match e {
            Error::LaurentPhenomenonViolation { .. } => {
                Error::LaurentPhenomenonViolation { prefix: walk[..=step].to_vec() }
            }
            other => other,
        })?;
        let new = &s.cluster[k];
        let holds = &old * new == &plus + &minus;
        records.push(VariableRecord::new(format!("step {} (mu_{})", step + 1, k + 1), new.clone(), holds));
    }
    Ok(LaurentCheck { name: "laurent".into(), records, require_positive })
}

/// Laurent/positivity check for the rank-2 recurrence `(b, c)`, covering
/// `x3 ..= x_depth`.
pub fn rank2_check(b: u32, c: u32, depth: usize, require_positive: bool) -> Result<LaurentCheck> {
    let xs = rank2_sequence(b, c, depth.max(2))?;
    let one = LaurentPoly::one(2);
    let records = (2..xs.len())
        .map(|j| {
            // xs[j] is x_{j+1}; its relation is indexed by i = j
            let e = if j % 2 == 1 { b } else { c };
            let holds = &xs[j - 2] * &xs[j] == &one + &xs[j - 1].pow(e);
            VariableRecord::new(format!("x{}", j + 1), xs[j].clone(), holds)
        })
        .collect();
    Ok(LaurentCheck { name: format!("laurent-rank2({b},{c})"), records, require_positive })
}

/// Randomized check that `mu_k . mu_k` is the identity on seeds and matrices.
///
/// Each trial draws a rank `1..=max_rank`, a skew-symmetric matrix with
/// entries bounded by `bound`, and a short random walk from the initial seed,
/// then tests every direction.
pub fn verify_involution(trials: usize, max_rank: usize, bound: i64, rng_seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut rep = Report::new("involution");
    let mut failures = 0usize;
    let mut checked = 0usize;
    for trial in 0..trials {
        let n = rng.gen_range(1..=max_rank);
        let matrix = ExchangeMatrix::random(&mut rng, n, bound);
        let prefix: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..n)).collect();
        let seed = match Seed::initial(matrix.clone()).mutate_walk(&prefix) {
            Ok(s) => s,
            Err(e) => {
                failures += 1;
                rep.fail(format!("trial {trial}"), format!("prefix {prefix:?} on {:?}: {e}", matrix.rows()));
                continue;
            }
        };
        for k in 0..n {
            checked += 1;
            let ok = match seed.mutate(k).and_then(|s| s.mutate(k)) {
                Ok(back) => back == seed && back.matrix().is_skew_symmetric(),
                Err(_) => false,
            };
            let skew = seed.matrix().mutate(k).map(|m| m.is_skew_symmetric()).unwrap_or(false);
            if !(ok && skew) {
                failures += 1;
                rep.fail(format!("trial {trial} k={}", k + 1), format!("matrix {:?}, prefix {prefix:?}", matrix.rows()));
            }
        }
    }
    rep.check(
        "summary",
        failures == 0,
        format!("{trials} seeds, {checked} directions, {failures} failures (rank <= {max_rank}, |b| <= {bound})"),
    );
    rep
}

/// Laurent phenomenon with positivity for the first `depth` cluster
/// variables: the `(2,2)` sphere seed along the alternating walk, and the
/// rank-2 recurrences `(2,2)` and `(1,4)`.
pub fn verify_laurent(depth: usize) -> Report {
    let mut rep = Report::new("laurent");
    let walk: Vec<usize> = (0..depth.saturating_sub(2)).map(|i| i % 2).collect();
    let seed_run = triangulation_matrix(0, 2)
        .and_then(|m| laurent_phenomenon_check(&Seed::initial(m), &walk, true))
        .map(|mut c| {
            c.name = "seed(2,2)".into();
            c
        });
    let runs = [seed_run, rank2_check(2, 2, depth, true), rank2_check(1, 4, depth, true)];
    for run in runs {
        match run {
            Ok(c) => rep.absorb(c.to_report()),
            Err(e) => rep.fail("run", e.to_string()),
        }
    }
    rep
}
