//! Noncommutative polynomials over ℚ(q), ordered rewriting modulo defining
//! relations, and algebra-level checks of bridges and antipodes.

mod hopf;
mod rewrite;

use std::collections::BTreeMap;
use std::fmt;

pub use hopf::{
    all_orientations, asserted_identities, check_bridge_homomorphism, check_l_hopf, slq2_antipodes, AntipodeData, HopfError, HopfIdentity,
    Side, Sigma,
};
pub use rewrite::{nc_normalize, nc_normalize_tensor, relation_set, CriticalPair, RewriteError, RewriteSystem, Rule, DEFAULT_STEP_BOUND};

use crate::exactlinalg::{Label, Scalar, TensorVec};

/// A word in the generators; the empty word is the unit.
pub type Word = Vec<Label>;

/// A finite sum of scalar multiples of words, with no zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(Scalar::one(), w)
    }

    pub fn generator(l: &Label) -> Self {
        NCPoly::word(vec![l.clone()])
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, &c);
        p
    }

    /// `names` are generator labels, e.g. `&["a", "d"]` for the word `ad`.
    pub fn of(names: &[&str]) -> Self {
        NCPoly::word(names.iter().map(|n| Label::new(n)).collect())
    }

    pub fn from_terms<I: IntoIterator<Item = (Scalar, Word)>>(terms: I) -> Self {
        let mut p = NCPoly::zero();
        for (c, w) in terms {
            p.add_term(w, &c);
        }
        p
    }

    /// A degree-one tensor vector read as a linear polynomial.
    pub fn from_linear(v: &TensorVec) -> Self {
        NCPoly::from_terms(v.iter().map(|(t, c)| (c.clone(), t.clone())))
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(c * d));
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(other, &Scalar::one());
        p
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(other, &-Scalar::one());
        p
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_scaled(self, c);
        p
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                p.add_term(w, &(c * d));
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Label]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// Replaces each generator by a polynomial and expands.
    pub fn substitute<F: Fn(&Label) -> NCPoly>(&self, f: F) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::one();
            for l in w {
                acc = acc.mul(&f(l));
            }
            out.add_scaled(&acc, c);
        }
        out
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[Label]) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    let sep = if w.iter().all(|l| l.as_str().chars().count() == 1) { "" } else { "·" };
    let parts: Vec<&str> = w.iter().map(Label::as_str).collect();
    write!(f, "{}", parts.join(sep))
}

fn write_terms<'a, I>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
    body: &dyn Fn(&mut fmt::Formatter<'_>, &'a [Word]) -> fmt::Result,
) -> fmt::Result
where
    I: Iterator<Item = (&'a [Word], &'a Scalar)>,
{
    let mut first = true;
    for (w, c) in terms {
        let neg = c.is_negative_form() && !c.is_compound();
        let mag = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        let unit = w.iter().all(Vec::is_empty);
        if unit || !mag.is_one() {
            if mag.is_compound() {
                write!(f, "({mag})")?;
            } else {
                write!(f, "{mag}")?;
            }
        }
        if !unit {
            if !mag.is_one() {
                write!(f, "·")?;
            }
            body(f, w)?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<(Vec<Word>, &Scalar)> = self.terms.iter().map(|(w, c)| (vec![w.clone()], c)).collect();
        write_terms(f, words.iter().map(|(w, c)| (w.as_slice(), *c)), &|f, w| write_word(f, &w[0]))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of `E^{⊗k}`: a sum of scalar multiples of tuples of words,
/// multiplied factorwise.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct NCTensor {
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl NCTensor {
    pub fn zero() -> Self {
        NCTensor::default()
    }

    /// `1⊗…⊗1` with `k` factors.
    pub fn unit(k: usize) -> Self {
        NCTensor::from_terms([(Scalar::one(), vec![Vec::new(); k])])
    }

    pub fn from_terms<I: IntoIterator<Item = (Scalar, Vec<Word>)>>(terms: I) -> Self {
        let mut t = NCTensor::zero();
        for (c, w) in terms {
            t.add_term(w, &c);
        }
        t
    }

    /// Each tensor of labels becomes a tuple of one-letter words.
    pub fn from_tensor(v: &TensorVec) -> Self {
        NCTensor::from_terms(v.iter().map(|(t, c)| (c.clone(), t.iter().map(|l| vec![l.clone()]).collect())))
    }

    pub fn add_term(&mut self, w: Vec<Word>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &NCTensor, c: &Scalar) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(c * d));
        }
    }

    pub fn mul(&self, other: &NCTensor) -> NCTensor {
        let mut out = NCTensor::zero();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let w = u.iter().zip(v).map(|(x, y)| x.iter().chain(y).cloned().collect()).collect();
                out.add_term(w, &(c * d));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Display for NCTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(w, c)| (w.as_slice(), c)), &|f, ws| {
            for (i, w) in ws.iter().enumerate() {
                if i > 0 {
                    write!(f, "⊗")?;
                }
                write_word(f, w)?;
            }
            Ok(())
        })
    }
}

impl fmt::Debug for NCTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_display() {
        let a = NCPoly::of(&["a"]);
        let b = NCPoly::of(&["b"]);
        let p = a.mul(&b).sub(&b.mul(&a).scale(&Scalar::q()));
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "ab - q·ba");
        assert_eq!(NCPoly::one().to_string(), "1");
        assert_eq!(NCPoly::zero().to_string(), "0");
        assert_eq!(NCPoly::one().scale(&Scalar::from_int(-3)).to_string(), "-3");
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn tensor_products_are_factorwise() {
        let t = NCTensor::from_tensor(&TensorVec::of(&[&["a", "x"]]));
        let s = NCTensor::from_tensor(&TensorVec::of(&[&["b", "y"]]));
        assert_eq!(t.mul(&s).to_string(), "ab⊗xy");
        assert_eq!(NCTensor::unit(2).to_string(), "1");
        assert_eq!(NCTensor::unit(2).mul(&t), t);
    }

    #[test]
    fn substitution() {
        let p = NCPoly::of(&["a", "b"]);
        let s = p.substitute(|l| if l.as_str() == "a" { NCPoly::of(&["d"]) } else { NCPoly::generator(l).scale(&-Scalar::q()) });
        assert_eq!(s, NCPoly::of(&["d", "b"]).scale(&-Scalar::q()));
    }
}
