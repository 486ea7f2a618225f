use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFunction};

use super::matching::PlanarMatching;

/// A linear combination of planar diagrams with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement {
    strands: usize,
    terms: BTreeMap<PlanarMatching, LaurentPoly>,
}

impl TlElement {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &PlanarMatching) -> Option<&LaurentPoly> {
        self.terms.get(d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: PlanarMatching, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self { strands: self.strands, terms: BTreeMap::new() };
        for (d, k) in &self.terms {
            out.add_term(d.clone(), k * c);
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut out = self.clone();
        for (d, k) in &other.terms {
            out.add_term(d.clone(), k.clone());
        }
        Ok(out)
    }
}

/// The Temperley–Lieb diagram algebra on a fixed number of strands, with
/// loop value `delta`.
#[derive(Clone, Debug)]
pub struct TlAlgebra {
    strands: usize,
    delta: LaurentPoly,
}

impl TlAlgebra {
    pub fn new(strands: usize, delta: LaurentPoly) -> Self {
        Self { strands, delta }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta(&self) -> &LaurentPoly {
        &self.delta
    }

    fn arity(&self) -> usize {
        self.delta.arity()
    }

    pub fn zero(&self) -> TlElement {
        TlElement { strands: self.strands, terms: BTreeMap::new() }
    }

    pub fn diagram(&self, d: PlanarMatching, c: LaurentPoly) -> Result<TlElement> {
        if d.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: d.strands() });
        }
        let mut out = self.zero();
        out.add_term(d, c);
        Ok(out)
    }

    pub fn identity(&self) -> TlElement {
        self.diagram(PlanarMatching::identity(self.strands), LaurentPoly::one(self.arity()))
            .expect("same strand count")
    }

    /// `E_i` for `1 <= i < strands`.
    pub fn generator(&self, i: usize) -> Result<TlElement> {
        if i == 0 || i >= self.strands {
            return Err(Error::IndexOutOfRange { index: i, len: self.strands });
        }
        self.diagram(PlanarMatching::generator(self.strands, i), LaurentPoly::one(self.arity()))
    }

    /// `a * b`, with `a` stacked above `b`.
    pub fn compose(&self, a: &TlElement, b: &TlElement) -> Result<TlElement> {
        for x in [a, b] {
            if x.strands != self.strands {
                return Err(Error::StrandMismatch { left: self.strands, right: x.strands });
            }
        }
        let mut out = self.zero();
        let mut delta_pows = vec![LaurentPoly::one(self.arity())];
        for (da, ca) in &a.terms {
            for (db, cb) in &b.terms {
                let (d, loops) = da.compose(db);
                while delta_pows.len() <= loops {
                    let next = delta_pows.last().expect("non-empty") * &self.delta;
                    delta_pows.push(next);
                }
                out.add_term(d, &(ca * cb) * &delta_pows[loops]);
            }
        }
        Ok(out)
    }

    /// Normalised Markov trace: a diagram with `c` loops after closure maps to
    /// `delta^(c - n)`.
    pub fn markov_trace(&self, x: &TlElement) -> Result<RationalFunction> {
        if x.strands != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: x.strands });
        }
        let n = self.strands;
        let mut num = LaurentPoly::zero(self.arity());
        for (d, c) in &x.terms {
            let loops = d.closure_loops();
            // numerator carries delta^(c - 1), the common denominator delta^(n - 1)
            num = &num + &(c * &self.delta.pow(loops.saturating_sub(1) as u32));
        }
        let den = self.delta.pow(n.saturating_sub(1) as u32);
        if n == 0 {
            return Ok(RationalFunction::from_laurent(num));
        }
        RationalFunction::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Vars;
    use crate::tl::matching::all_matchings;

    fn algebra(n: usize) -> TlAlgebra {
        TlAlgebra::new(n, Vars::new(["d"]).parse("d").unwrap())
    }

    fn mul(alg: &TlAlgebra, xs: &[&TlElement]) -> TlElement {
        xs.iter().fold(alg.identity(), |acc, x| alg.compose(&acc, x).unwrap())
    }

    #[test]
    fn generator_relations_exhaustive() {
        for n in 2..=5 {
            let alg = algebra(n);
            let e: Vec<TlElement> = (1..n).map(|i| alg.generator(i).unwrap()).collect();
            for i in 0..n - 1 {
                let sq = alg.compose(&e[i], &e[i]).unwrap();
                assert_eq!(sq, e[i].scale(alg.delta()), "E{}^2, n={n}", i + 1);
                for j in 0..n - 1 {
                    let ij = alg.compose(&e[i], &e[j]).unwrap();
                    let ji = alg.compose(&e[j], &e[i]).unwrap();
                    if i.abs_diff(j) == 1 {
                        assert_eq!(mul(&alg, &[&e[i], &e[j], &e[i]]), e[i], "n={n} i={i} j={j}");
                    } else if i.abs_diff(j) >= 2 {
                        assert_eq!(ij, ji);
                    }
                }
            }
        }
    }

    #[test]
    fn compose_is_associative_on_basis() {
        let n = 4;
        let alg = algebra(n);
        let basis: Vec<TlElement> = all_matchings(n)
            .into_iter()
            .map(|d| alg.diagram(d, LaurentPoly::one(1)).unwrap())
            .collect();
        for a in &basis {
            for b in &basis {
                let ab = alg.compose(a, b).unwrap();
                for c in &basis {
                    let left = alg.compose(&ab, c).unwrap();
                    let right = alg.compose(a, &alg.compose(b, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn strand_mismatch() {
        let a = algebra(2).identity();
        let alg3 = algebra(3);
        assert_eq!(alg3.compose(&a, &alg3.identity()), Err(Error::StrandMismatch { left: 3, right: 2 }));
        assert!(alg3.generator(3).is_err());
        assert!(alg3.generator(0).is_err());
    }

    #[test]
    fn trace_values() {
        // with delta = (t+1)/sqrt(t): tr(e_i) = t/(t+1)^2 where e_i = E_i/delta
        let t = Vars::t();
        let delta = t.parse("t^(1/2)+t^(-1/2)").unwrap();
        let alg = TlAlgebra::new(3, delta.clone());
        let expect1 = RationalFunction::new(t.parse("t").unwrap(), t.parse("t^2+2t+1").unwrap()).unwrap();
        for i in 1..3 {
            let e = alg.generator(i).unwrap();
            let tr = alg.markov_trace(&e).unwrap();
            let normalised = RationalFunction::new(tr.num.clone(), &tr.den * &delta).unwrap();
            assert_eq!(normalised, expect1);
        }
        let e12 = alg.compose(&alg.generator(1).unwrap(), &alg.generator(2).unwrap()).unwrap();
        let tr = alg.markov_trace(&e12).unwrap();
        let normalised = RationalFunction::new(tr.num.clone(), &tr.den * &delta.pow(2)).unwrap();
        let expect2 = RationalFunction::new(t.parse("t^2").unwrap(), t.parse("t+1").unwrap().pow(4)).unwrap();
        assert_eq!(normalised, expect2);
        assert_eq!(alg.markov_trace(&alg.identity()).unwrap(), RationalFunction::from_laurent(LaurentPoly::one(1)));
    }
}
