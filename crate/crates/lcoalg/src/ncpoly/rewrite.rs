use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::exactlinalg::{Label, Scalar};

use super::{NCPoly, NCTensor, Word};

pub const DEFAULT_STEP_BOUND: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("normalisation exceeded {0} rewrite steps")]
    StepBound(usize),
    #[error("unknown relation set `{0}`")]
    UnknownSet(String),
    #[error("rule {0} does not decrease the word order")]
    NotDecreasing(String),
}

/// `lhs → rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// Ordered generators and oriented rules; words compare by length, then
/// lexicographically by generator position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    order: Vec<Label>,
    rules: Vec<Rule>,
    bound: usize,
}

impl RewriteSystem {
    /// Rejects any rule whose right side has a word not below its left side.
    pub fn new(order: Vec<Label>, rules: Vec<Rule>) -> Result<Self, RewriteError> {
        let r = RewriteSystem { order, rules, bound: DEFAULT_STEP_BOUND };
        for rule in &r.rules {
            if rule.rhs.iter().any(|(w, _)| r.compare(w, &rule.lhs) != Ordering::Less) {
                return Err(RewriteError::NotDecreasing(format!("{} → {}", NCPoly::word(rule.lhs.clone()), rule.rhs)));
            }
        }
        Ok(r)
    }

    pub fn with_step_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn order(&self) -> &[Label] {
        &self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn step_bound(&self) -> usize {
        self.bound
    }

    fn rank<'a>(&self, l: &'a Label) -> (usize, &'a str) {
        match self.order.iter().position(|g| g == l) {
            Some(i) => (i, ""),
            None => (self.order.len(), l.as_str()),
        }
    }

    /// Degree-lexicographic comparison.
    pub fn compare(&self, u: &[Label], v: &[Label]) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| {
            for (x, y) in u.iter().zip(v) {
                match self.rank(x).cmp(&self.rank(y)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// The rules of both systems, with `other`'s generators ordered after
    /// `self`'s.
    pub fn union(&self, other: &RewriteSystem) -> RewriteSystem {
        let mut order = self.order.clone();
        order.extend(other.order.iter().filter(|l| !self.order.contains(l)).cloned());
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        RewriteSystem { order, rules, bound: self.bound.max(other.bound) }
    }

    /// The leftmost position where some rule applies, and that rule.
    fn find(&self, w: &[Label]) -> Option<(usize, &Rule)> {
        (0..w.len()).find_map(|i| self.rules.iter().find(|r| w[i..].starts_with(&r.lhs)).map(|r| (i, r)))
    }

    fn apply_at(w: &[Label], i: usize, rule: &Rule) -> NCPoly {
        let prefix = NCPoly::word(w[..i].to_vec());
        let suffix = NCPoly::word(w[i + rule.lhs.len()..].to_vec());
        prefix.mul(&rule.rhs).mul(&suffix)
    }

    /// Whether no rule applies anywhere in `w`.
    pub fn is_normal(&self, w: &[Label]) -> bool {
        self.find(w).is_none()
    }

    /// Every overlap `l₁ = uv`, `l₂ = vw` (and every inclusion) of two left
    /// sides, reduced both ways.
    pub fn critical_pairs(&self) -> Result<Vec<CriticalPair>, RewriteError> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                for k in 1..l1.len() {
                    if l1.len() - k < l2.len() && l2.starts_with(&l1[k..]) {
                        let mut word = l1.clone();
                        word.extend(l2[l1.len() - k..].iter().cloned());
                        out.push(self.pair(word, (0, r1), (k, r2))?);
                    }
                }
                if r1 != r2 && l2.len() <= l1.len() {
                    for k in 0..=l1.len() - l2.len() {
                        if l1[k..].starts_with(l2) {
                            out.push(self.pair(l1.clone(), (0, r1), (k, r2))?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn pair(&self, word: Word, first: (usize, &Rule), second: (usize, &Rule)) -> Result<CriticalPair, RewriteError> {
        let left = nc_normalize(&Self::apply_at(&word, first.0, first.1), self)?;
        let right = nc_normalize(&Self::apply_at(&word, second.0, second.1), self)?;
        Ok(CriticalPair { word, left, right })
    }
}

/// An overlap word and its two normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub word: Word,
    pub left: NCPoly,
    pub right: NCPoly,
}

impl CriticalPair {
    pub fn resolves(&self) -> bool {
        self.left == self.right
    }
}

/// Rewrites until no rule applies, counting rule applications against the
/// system's step bound.
pub fn nc_normalize(p: &NCPoly, r: &RewriteSystem) -> Result<NCPoly, RewriteError> {
    let mut pending: BTreeMap<Word, Scalar> = p.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut done = NCPoly::zero();
    let mut steps = 0;
    while let Some((w, c)) = pending.pop_first() {
        match r.find(&w) {
            None => done.add_term(w, &c),
            Some((i, rule)) => {
                steps += 1;
                if steps > r.bound {
                    return Err(RewriteError::StepBound(r.bound));
                }
                for (v, d) in RewriteSystem::apply_at(&w, i, rule).iter() {
                    let e = pending.entry(v.clone()).or_default();
                    *e += &(&c * d);
                    if e.is_zero() {
                        pending.remove(v);
                    }
                }
            }
        }
    }
    Ok(done)
}

/// Normalises every tensor factor.
pub fn nc_normalize_tensor(t: &NCTensor, r: &RewriteSystem) -> Result<NCTensor, RewriteError> {
    let mut out = NCTensor::zero();
    for (ws, c) in t.iter() {
        let mut acc = NCTensor::unit(ws.len());
        for (i, w) in ws.iter().enumerate() {
            let nf = nc_normalize(&NCPoly::word(w.clone()), r)?;
            let slot = NCTensor::from_terms(nf.iter().map(|(v, d)| {
                let mut key = vec![Vec::new(); ws.len()];
                key[i] = v.clone();
                (d.clone(), key)
            }));
            acc = acc.mul(&slot);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

fn rule(lhs: &[&Label], rhs: NCPoly) -> Rule {
    Rule { lhs: lhs.iter().map(|l| (*l).clone()).collect(), rhs }
}

fn w(ls: &[&Label]) -> NCPoly {
    NCPoly::word(ls.iter().map(|l| (*l).clone()).collect())
}

/// The `Sl_q(2)` relations on generators named `[a, b, c, d]`, ordered
/// `b < c < a < d`:
/// `ab → q⁻¹ba, ac → q⁻¹ca, cb → bc, dc → q·cd, db → q·bd,
/// ad → 1 + q⁻¹bc, da → 1 + q·bc`.
fn slq2_on(g: [Label; 4]) -> RewriteSystem {
    let [a, b, c, d] = &g;
    let (q, qi) = (Scalar::q(), Scalar::q_pow(-1));
    let rules = vec![
        rule(&[a, b], w(&[b, a]).scale(&qi)),
        rule(&[a, c], w(&[c, a]).scale(&qi)),
        rule(&[c, b], w(&[b, c])),
        rule(&[d, c], w(&[c, d]).scale(&q)),
        rule(&[d, b], w(&[b, d]).scale(&q)),
        rule(&[a, d], NCPoly::one().add(&w(&[b, c]).scale(&qi))),
        rule(&[d, a], NCPoly::one().add(&w(&[b, c]).scale(&q))),
    ];
    RewriteSystem::new(vec![b.clone(), c.clone(), a.clone(), d.clone()], rules).expect("oriented by construction")
}

/// Named relation sets with their generators: `slq2` on `a, b, c, d`;
/// `slq2_tilde`, its image under `a ↦ y, b ↦ x, c ↦ u, d ↦ z`; `group(n)`, a
/// single generator `g` with `gⁿ → 1`.
pub fn relation_set(name: &str) -> Result<(RewriteSystem, Vec<Label>), RewriteError> {
    let ls = |names: [&str; 4]| names.map(Label::new);
    match name {
        "slq2" => {
            let g = ls(["a", "b", "c", "d"]);
            Ok((slq2_on(g.clone()), g.to_vec()))
        }
        "slq2_tilde" => {
            let g = ls(["y", "x", "u", "z"]);
            Ok((slq2_on(g.clone()), g.to_vec()))
        }
        _ => {
            let n = name
                .strip_prefix("group(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.trim().parse::<usize>().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| RewriteError::UnknownSet(name.to_string()))?;
            let g = Label::new("g");
            let r = Rule { lhs: vec![g.clone(); n], rhs: NCPoly::one() };
            Ok((RewriteSystem::new(vec![g.clone()], vec![r])?, vec![g]))
        }
    }
}
