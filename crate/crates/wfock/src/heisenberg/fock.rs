//! Fock modules over the rank N-1 Heisenberg algebra.
//!
//! A [`FockVector`] is a finite Scalar-linear combination of creation
//! monomials over a highest-weight vector `|eta>`.  A creation monomial is
//! one partition per color k = 1..N-1, recording the modes
//! `prod_k prod_i a^k_{-(lambda^k)_i}`.  Elementary actions live here:
//! creation, annihilation (commuting a positive mode through the
//! monomial), zero modes, and the normal-ordered application of products
//! of weight-labelled modes that the Virasoro, W and Miura fields expand
//! into.

use super::weight::Weight;
use crate::partition::Partition;
use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// One creation-operator monomial: partition `colors[k-1]` lists the mode
/// indices `-m` applied in color `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CreationMonomial {
    colors: Vec<Partition>,
}

impl CreationMonomial {
    pub fn identity(rank: usize) -> Self {
        CreationMonomial {
            colors: vec![Partition::empty(); rank],
        }
    }

    pub fn new(colors: Vec<Partition>) -> Self {
        CreationMonomial { colors }
    }

    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Partition] {
        &self.colors
    }

    /// Partition of creation modes in color `k`, 1-based.
    pub fn color(&self, k: usize) -> &Partition {
        &self.colors[k - 1]
    }

    pub fn grade(&self) -> u64 {
        self.colors.iter().map(Partition::weight).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(Partition::is_empty)
    }

    /// Insert a creation mode `a^k_{-m}`.
    pub fn with_created(&self, k: usize, m: u32) -> CreationMonomial {
        let mut colors = self.colors.clone();
        colors[k - 1] = colors[k - 1].insert_part(m);
        CreationMonomial { colors }
    }

    /// Remove one creation mode `a^k_{-m}`; None if absent.
    pub fn with_removed(&self, k: usize, m: u32) -> Option<CreationMonomial> {
        let removed = self.colors[k - 1].remove_part(m)?;
        let mut colors = self.colors.clone();
        colors[k - 1] = removed;
        Some(CreationMonomial { colors })
    }

    /// Bitmask of part values present in any color.
    pub fn value_mask(&self) -> u64 {
        self.colors.iter().fold(0, |m, p| m | p.value_mask())
    }
}

impl PartialOrd for CreationMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CreationMonomial {
    /// Sorted by grade, then color partitions left to right.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.colors.cmp(&other.colors))
    }
}

impl fmt::Display for CreationMonomial {
    /// Renders `a[1,-2]*a[1,-1]^2*a[2,-1]`; the empty monomial is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for (ci, lam) in self.colors.iter().enumerate() {
            let k = ci + 1;
            let mut idx = 0;
            let parts = lam.parts();
            while idx < parts.len() {
                let v = parts[idx];
                let mut mult = 1;
                while idx + mult < parts.len() && parts[idx + mult] == v {
                    mult += 1;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if mult == 1 {
                    write!(f, "a[{k},-{v}]")?;
                } else {
                    write!(f, "a[{k},-{v}]^{mult}")?;
                }
                idx += mult;
            }
        }
        Ok(())
    }
}

/// A finite Scalar-linear combination of creation monomials applied to a
/// highest-weight vector.
#[derive(Clone, PartialEq, Debug)]
pub struct FockVector {
    weight: Weight,
    terms: BTreeMap<CreationMonomial, Scalar>,
}

impl FockVector {
    /// The highest-weight vector `|eta>`.
    pub fn highest_weight(weight: Weight) -> Self {
        let rank = weight.rank();
        let mut terms = BTreeMap::new();
        terms.insert(CreationMonomial::identity(rank), Scalar::one());
        FockVector { weight, terms }
    }

    pub fn zero(weight: Weight) -> Self {
        FockVector {
            weight,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        weight: Weight,
        terms: impl IntoIterator<Item = (CreationMonomial, Scalar)>,
    ) -> Self {
        let mut v = FockVector::zero(weight);
        for (m, c) in terms {
            v.add_term(m, c);
        }
        v
    }

    pub fn highest_weight_label(&self) -> &Weight {
        &self.weight
    }

    pub fn rank(&self) -> usize {
        self.weight.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CreationMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &CreationMonomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest grade in the support; zero vector reports 0.
    pub fn max_grade(&self) -> u64 {
        self.terms.keys().map(CreationMonomial::grade).max().unwrap_or(0)
    }

    /// Some(grade) when all terms share one grade; zero vector is
    /// homogeneous of every grade and reports None.
    pub fn homogeneous_grade(&self) -> Option<u64> {
        let mut grades = self.terms.keys().map(CreationMonomial::grade);
        let first = grades.next()?;
        if grades.all(|g| g == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn add_term(&mut self, mono: CreationMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &FockVector) -> FockVector {
        assert_eq!(self.weight, rhs.weight, "adding vectors over different weights");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FockVector) -> FockVector {
        assert_eq!(self.weight, rhs.weight, "subtracting vectors over different weights");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> FockVector {
        if c.is_zero() {
            return FockVector::zero(self.weight.clone());
        }
        FockVector {
            weight: self.weight.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> FockVector {
        let mut out = FockVector::zero(self.weight.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Move the same expansion over a different highest weight.
    pub fn with_weight(&self, weight: Weight) -> FockVector {
        assert_eq!(self.rank(), weight.rank());
        FockVector {
            weight,
            terms: self.terms.clone(),
        }
    }

    /// Apply the creation operator `a^k_{-m}`.
    pub fn create(&self, k: usize, m: u32) -> FockVector {
        let mut out = FockVector::zero(self.weight.clone());
        for (mono, c) in &self.terms {
            out.add_term(mono.with_created(k, m), c.clone());
        }
        out
    }

    /// Apply the annihilation operator `a^k_m` (m > 0), commuting it
    /// through the creation monomials.  Removing a part `m` from color `j`
    /// contributes `m * A_{kj} * multiplicity`.
    pub fn annihilate(&self, k: usize, m: u32) -> FockVector {
        let labels: Vec<Scalar> = (1..=self.rank())
            .map(|j| Scalar::from_int(super::weight::cartan_entry(k, j)))
            .collect();
        self.apply_weight_annihilator(&labels, m)
    }

    /// Apply the zero mode `a^k_0`, multiplying by the k-th Dynkin label
    /// of the highest weight.
    pub fn zero_mode(&self, k: usize) -> FockVector {
        self.scale(self.weight.label(k))
    }

    /// Annihilator labelled by a weight `xi` (Dynkin labels given): the
    /// commutator with a creation mode in color `j` carries `(xi, alpha_j)
    /// = xi_j`.
    pub(crate) fn apply_weight_annihilator(&self, labels: &[Scalar], m: u32) -> FockVector {
        let mut out = FockVector::zero(self.weight.clone());
        let factor_m = Scalar::from_int(m as i64);
        for (mono, c) in &self.terms {
            if mono.value_mask() & (1 << m.min(63)) == 0 {
                continue;
            }
            for (j, label) in labels.iter().enumerate() {
                if label.is_zero() {
                    continue;
                }
                let Some(removed) = mono.with_removed(j + 1, m) else {
                    continue;
                };
                let mult = mono.color(j + 1).multiplicity(m) as i64;
                let coeff = &(c * label) * &(&factor_m * &Scalar::from_int(mult));
                out.add_term(removed, coeff);
            }
        }
        out
    }
}

/// A single Heisenberg mode labelled by a weight: `xi_m` with `xi` in
/// Dynkin labels.  `index < 0` creates, `index > 0` annihilates,
/// `index == 0` acts by `(xi, eta)` on `F_eta`.
#[derive(Clone, Debug)]
pub struct Mode {
    pub weight: Weight,
    pub index: i64,
}

impl Mode {
    pub fn new(weight: Weight, index: i64) -> Self {
        Mode { weight, index }
    }
}

/// Apply a normal-ordered product of weight-labelled modes (creation
/// operators left) times `scale` to `v`, adding into `out`.
///
/// The factors may be given in any order; they are applied annihilators
/// first (largest index first), which is exactly the normal-ordered
/// action since same-sign modes commute and zero modes are central among
/// the `a`-modes.
pub fn apply_normal_ordered(out: &mut FockVector, factors: &[Mode], scale: &Scalar, v: &FockVector) {
    if scale.is_zero() || v.is_zero() {
        return;
    }
    let mut order: Vec<&Mode> = factors.iter().collect();
    order.sort_by(|a, b| b.index.cmp(&a.index));

    // Quick rejection: every annihilator index must appear as a part value
    // somewhere (zero modes and creators always act).
    for (mono, c) in &v.terms {
        let mask = mono.value_mask();
        let mut dead = false;
        for f in &order {
            if f.index > 0 {
                let idx = (f.index as u64).min(63);
                if mask & (1 << idx) == 0 {
                    dead = true;
                    break;
                }
            }
        }
        if dead {
            continue;
        }
        // Work list of (monomial, small multiplier); the term coefficient
        // is folded in only at the end.
        let mut work: Vec<(CreationMonomial, Scalar)> = vec![(mono.clone(), scale.clone())];
        for f in &order {
            if work.is_empty() {
                break;
            }
            let mut next: Vec<(CreationMonomial, Scalar)> = Vec::with_capacity(work.len());
            if f.index > 0 {
                let m = f.index as u32;
                let factor_m = Scalar::from_int(f.index);
                for (mono, w) in &work {
                    for (j, label) in f.weight.labels().iter().enumerate() {
                        if label.is_zero() {
                            continue;
                        }
                        let Some(removed) = mono.with_removed(j + 1, m) else {
                            continue;
                        };
                        let mult = mono.color(j + 1).multiplicity(m) as i64;
                        let coeff = &(w * label) * &(&factor_m * &Scalar::from_int(mult));
                        if !coeff.is_zero() {
                            next.push((removed, coeff));
                        }
                    }
                }
            } else if f.index == 0 {
                let eigen = f
                    .weight
                    .bilinear(v.highest_weight_label())
                    .expect("equal ranks");
                if eigen.is_zero() {
                    next.clear();
                } else {
                    for (mono, w) in &work {
                        next.push((mono.clone(), w * &eigen));
                    }
                }
            } else {
                let m = (-f.index) as u32;
                let coords = f.weight.root_coordinates();
                for (mono, w) in &work {
                    for (j, coord) in coords.iter().enumerate() {
                        if coord.is_zero() {
                            continue;
                        }
                        next.push((mono.with_created(j + 1, m), w * coord));
                    }
                }
            }
            work = next;
        }
        for (mono2, w) in work {
            out.add_term(mono2, &w * c);
        }
    }
}

impl FockVector {
    /// JSON form: highest-weight labels as scalar strings, monomials as
    /// arrays of per-color partitions.
    pub fn to_json(&self) -> serde_json::Value {
        let weight: Vec<String> = self.weight.labels().iter().map(|l| l.to_string()).collect();
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(mono, c)| {
                serde_json::json!({
                    "monomial": mono.colors().iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                    "coefficient": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "rank": self.rank(),
            "weight": weight,
            "terms": terms,
        })
    }

    /// Parse the [`FockVector::to_json`] format.
    pub fn from_json(value: &serde_json::Value) -> crate::error::Result<FockVector> {
        use crate::error::Error;
        let labels = value["weight"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing weight array".into()))?
            .iter()
            .map(|l| {
                l.as_str()
                    .ok_or_else(|| Error::Parse("weight label not a string".into()))?
                    .parse::<Scalar>()
            })
            .collect::<crate::error::Result<Vec<_>>>()?;
        let weight = Weight::new(labels);
        let mut out = FockVector::zero(weight);
        let terms = value["terms"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing terms array".into()))?;
        for term in terms {
            let colors = term["monomial"]
                .as_array()
                .ok_or_else(|| Error::Parse("missing monomial".into()))?
                .iter()
                .map(|p| {
                    let parts = p
                        .as_array()
                        .ok_or_else(|| Error::Parse("partition not an array".into()))?
                        .iter()
                        .map(|x| {
                            x.as_u64()
                                .map(|v| v as u32)
                                .ok_or_else(|| Error::Parse("bad part".into()))
                        })
                        .collect::<crate::error::Result<Vec<u32>>>()?;
                    Ok(Partition::new(parts))
                })
                .collect::<crate::error::Result<Vec<_>>>()?;
            let coeff: Scalar = term["coefficient"]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient not a string".into()))?
                .parse()?;
            out.add_term(CreationMonomial::new(colors), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for FockVector {
    /// One line per term: `monomial : coefficient`, grade-sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{mono} : {c}")?;
        }
        Ok(())
    }
}
