//! Self-maps of carriers: the shift derivation `D`, the maps
//! `δ_α(x) = α·x + x·α`, derivation checks, the semilattice of `δ` maps and
//! differential closures.
//!
//! A derivation on a carrier is an additive map `d` satisfying the Leibniz
//! rule `d(x·y) = d(x)·y + x·d(y)`. There is no subtraction and no zero, so
//! nothing else is required.
//!
//! Every search scans its domain in carrier order and returns the first
//! failure, so witnesses are reproducible.

use serde::Serialize;

use crate::chain::{Carrier, ChainEndomorphism};
use crate::error::{Error, Result};
use crate::strings::{StringType2, StringTypeM};

/// A total map from a domain carrier into an ambient carrier.
///
/// Equality is extensional: two self-maps are equal when they have the same
/// domain, ambient and action, whatever their labels.
#[derive(Debug, Clone, Serialize)]
pub struct SelfMap {
    label: String,
    domain: Carrier,
    ambient: Carrier,
    images: Vec<ChainEndomorphism>,
}

impl PartialEq for SelfMap {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.ambient == other.ambient && self.images == other.images
    }
}

impl Eq for SelfMap {}

impl SelfMap {
    /// `images[i]` is the value at `domain[i]`.
    pub fn new(
        label: impl Into<String>,
        domain: Carrier,
        ambient: Carrier,
        images: Vec<ChainEndomorphism>,
    ) -> Result<Self> {
        let label = label.into();
        if !domain.is_subset_of(&ambient) {
            return Err(Error::NotASubset);
        }
        if images.len() != domain.len() {
            return Err(Error::LengthMismatch {
                expected: domain.len(),
                actual: images.len(),
            });
        }
        if images.iter().any(|y| !ambient.contains(y)) {
            return Err(Error::EscapesAmbient { label });
        }
        Ok(SelfMap {
            label,
            domain,
            ambient,
            images,
        })
    }

    pub fn from_fn(
        label: impl Into<String>,
        domain: Carrier,
        ambient: Carrier,
        f: impl Fn(&ChainEndomorphism) -> ChainEndomorphism,
    ) -> Result<Self> {
        let images = domain.iter().map(f).collect();
        Self::new(label, domain, ambient, images)
    }

    pub fn identity(label: impl Into<String>, domain: Carrier) -> Self {
        let images = domain.elements().to_vec();
        SelfMap {
            label: label.into(),
            ambient: domain.clone(),
            domain,
            images,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn domain(&self) -> &Carrier {
        &self.domain
    }

    pub fn ambient(&self) -> &Carrier {
        &self.ambient
    }

    /// Values in domain order.
    pub fn images(&self) -> &[ChainEndomorphism] {
        &self.images
    }

    pub fn apply(&self, x: &ChainEndomorphism) -> Option<&ChainEndomorphism> {
        self.domain.index_of(x).map(|i| &self.images[i])
    }

    /// `(x, m(x))` in domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (&ChainEndomorphism, &ChainEndomorphism)> {
        self.domain.iter().zip(&self.images)
    }

    /// True when every value lies back in the domain.
    pub fn is_invariant(&self) -> bool {
        self.images.iter().all(|y| self.domain.contains(y))
    }

    fn require_invariant(&self) -> Result<()> {
        if self.is_invariant() {
            Ok(())
        } else {
            Err(Error::NotInvariant {
                label: self.label.clone(),
            })
        }
    }

    /// The same map on a smaller domain; the ambient is kept.
    pub fn restrict(&self, sub: &Carrier) -> Result<SelfMap> {
        let images = sub
            .iter()
            .map(|x| self.apply(x).cloned().ok_or(Error::NotASubset))
            .collect::<Result<Vec<_>>>()?;
        Ok(SelfMap {
            label: self.label.clone(),
            domain: sub.clone(),
            ambient: self.ambient.clone(),
            images,
        })
    }

    /// The same map with its ambient narrowed or widened to `ambient`.
    pub fn with_ambient(&self, ambient: &Carrier) -> Result<SelfMap> {
        Self::new(
            self.label.clone(),
            self.domain.clone(),
            ambient.clone(),
            self.images.clone(),
        )
    }

    /// `m^t(x)`, or `None` if an iterate leaves the domain.
    pub fn iterate(&self, x: &ChainEndomorphism, t: usize) -> Option<ChainEndomorphism> {
        let mut cur = x.clone();
        for _ in 0..t {
            cur = self.apply(&cur)?.clone();
        }
        Some(cur)
    }
}

/// The shift `D(α_k) = α_{k-1}`, `D(α_0) = α_0` on the whole string.
pub fn shift_derivation(s: &StringType2) -> SelfMap {
    let carrier = s.carrier().clone();
    let images = (0..=s.n())
        .map(|k| carrier.elements()[k.saturating_sub(1)].clone())
        .collect();
    SelfMap {
        label: "D".into(),
        domain: carrier.clone(),
        ambient: carrier,
        images,
    }
}

/// `δ_α(x) = α·x + x·α`, computed in the full endomorphism semiring.
pub fn delta_value(alpha: &ChainEndomorphism, x: &ChainEndomorphism) -> ChainEndomorphism {
    alpha.then(x).join(&x.then(alpha))
}

/// `δ_α` on `carrier`, with `carrier` as its ambient.
pub fn delta(alpha: &ChainEndomorphism, carrier: &Carrier) -> Result<SelfMap> {
    delta_into(alpha, carrier, carrier)
}

/// `δ_α` on `domain`, with values required to lie in `ambient`.
pub fn delta_into(
    alpha: &ChainEndomorphism,
    domain: &Carrier,
    ambient: &Carrier,
) -> Result<SelfMap> {
    if alpha.chain() != domain.chain() {
        return Err(Error::ChainMismatch {
            left: alpha.chain().len(),
            right: domain.chain().len(),
        });
    }
    SelfMap::from_fn(
        format!("delta({alpha})"),
        domain.clone(),
        ambient.clone(),
        |x| delta_value(alpha, x),
    )
}

/// A pair on which a map breaks an identity: `lhs` is the map applied to the
/// combined argument, `rhs` the combination of the map's values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeibnizWitness {
    pub x: ChainEndomorphism,
    pub y: ChainEndomorphism,
    pub lhs: ChainEndomorphism,
    pub rhs: ChainEndomorphism,
}

/// `m(x + y) ≠ m(x) + m(y)`.
pub type AdditivityWitness = LeibnizWitness;

/// Why a map is not a derivation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DerivationFailure {
    NotAdditive(AdditivityWitness),
    Leibniz(LeibnizWitness),
}

fn require_closed(
    set: &Carrier,
    domain: &Carrier,
    op: impl Fn(&ChainEndomorphism, &ChainEndomorphism) -> ChainEndomorphism,
    operation: &'static str,
) -> Result<()> {
    for x in set {
        for y in set {
            if !domain.contains(&op(x, y)) {
                return Err(Error::DomainNotClosed { operation });
            }
        }
    }
    Ok(())
}

/// First pair with `m(x + y) ≠ m(x) + m(y)`.
pub fn is_additive(m: &SelfMap) -> Result<Option<AdditivityWitness>> {
    require_closed(m.domain(), m.domain(), |x, y| x.join(y), "addition")?;
    for (x, mx) in m.pairs() {
        for (y, my) in m.pairs() {
            let lhs = m.apply(&x.join(y)).expect("closed").clone();
            let rhs = mx.join(my);
            if lhs != rhs {
                return Ok(Some(LeibnizWitness {
                    x: x.clone(),
                    y: y.clone(),
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(None)
}

/// Evaluates the Leibniz rule at one pair. `x`, `y` and `x·y` must lie in the
/// domain of `m`.
pub fn leibniz_at(
    m: &SelfMap,
    x: &ChainEndomorphism,
    y: &ChainEndomorphism,
) -> Result<Option<LeibnizWitness>> {
    let (mx, my) = match (m.apply(x), m.apply(y)) {
        (Some(mx), Some(my)) => (mx, my),
        _ => return Err(Error::NotASubset),
    };
    let lhs = m
        .apply(&x.then(y))
        .ok_or(Error::DomainNotClosed {
            operation: "composition",
        })?
        .clone();
    let rhs = mx.then(y).join(&x.then(my));
    Ok((lhs != rhs).then(|| LeibnizWitness {
        x: x.clone(),
        y: y.clone(),
        lhs,
        rhs,
    }))
}

/// First Leibniz failure over pairs drawn from `set`, evaluating `m` on the
/// products. `set` need not be closed itself, but its products must lie in
/// the domain of `m`.
pub fn leibniz_witness_on(m: &SelfMap, set: &Carrier) -> Result<Option<LeibnizWitness>> {
    if !set.is_subset_of(m.domain()) {
        return Err(Error::NotASubset);
    }
    require_closed(set, m.domain(), |x, y| x.then(y), "composition")?;
    for x in set {
        for y in set {
            if let Some(w) = leibniz_at(m, x, y)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// First pair with `m(x·y) ≠ m(x)·y + x·m(y)`.
pub fn satisfies_leibniz(m: &SelfMap) -> Result<Option<LeibnizWitness>> {
    leibniz_witness_on(m, m.domain())
}

/// First `x ∈ set` with `m(x²) ≠ m(x)·x + x·m(x)`, reported as the pair `(x, x)`.
pub fn jordan_witness_on(m: &SelfMap, set: &Carrier) -> Result<Option<LeibnizWitness>> {
    if !set.is_subset_of(m.domain()) {
        return Err(Error::NotASubset);
    }
    for x in set {
        if let Some(w) = leibniz_at(m, x, x)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Additivity first, then the Leibniz rule.
pub fn is_derivation(m: &SelfMap) -> Result<Option<DerivationFailure>> {
    require_closed(m.domain(), m.domain(), |x, y| x.then(y), "composition")?;
    if let Some(w) = is_additive(m)? {
        return Ok(Some(DerivationFailure::NotAdditive(w)));
    }
    Ok(satisfies_leibniz(m)?.map(DerivationFailure::Leibniz))
}

/// A point where two maps do not commute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommuteWitness {
    pub x: ChainEndomorphism,
    /// `m1(m2(x))`
    pub first_second: ChainEndomorphism,
    /// `m2(m1(x))`
    pub second_first: ChainEndomorphism,
}

/// First `x` with `m1(m2(x)) ≠ m2(m1(x))`.
pub fn maps_commute(m1: &SelfMap, m2: &SelfMap) -> Result<Option<CommuteWitness>> {
    if m1.domain() != m2.domain() || m1.ambient() != m2.ambient() {
        return Err(Error::DomainMismatch);
    }
    m1.require_invariant()?;
    m2.require_invariant()?;
    for x in m1.domain() {
        let a = m1.apply(m2.apply(x).unwrap()).unwrap();
        let b = m2.apply(m1.apply(x).unwrap()).unwrap();
        if a != b {
            return Ok(Some(CommuteWitness {
                x: x.clone(),
                first_second: a.clone(),
                second_first: b.clone(),
            }));
        }
    }
    Ok(None)
}

/// `x ↦ m1(m2(x))`: `m2` is applied first.
pub fn compose_maps(m1: &SelfMap, m2: &SelfMap) -> Result<SelfMap> {
    if m1.ambient() != m2.ambient() {
        return Err(Error::DomainMismatch);
    }
    let label = format!("{}∘{}", m1.label(), m2.label());
    let images = m2
        .images()
        .iter()
        .map(|y| {
            m1.apply(y).cloned().ok_or_else(|| Error::NotInvariant {
                label: m2.label().to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SelfMap::new(label, m2.domain().clone(), m2.ambient().clone(), images)
}

/// Structure of a family of self-maps under composition.
///
/// Maps are deduplicated extensionally; `classes[i]` lists the input
/// positions that collapse onto representative `i`, and
/// `table[i][j]` is the representative equal to `rep_i ∘ rep_j`, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemilatticeReport {
    pub closed: bool,
    pub commutative: bool,
    pub idempotent: bool,
    pub identity: Option<usize>,
    pub absorbing: Option<usize>,
    pub distinct_maps: usize,
    pub representatives: Vec<String>,
    pub classes: Vec<Vec<usize>>,
    pub table: Vec<Vec<Option<usize>>>,
    /// Representatives whose square is a different map.
    pub non_idempotent: Vec<usize>,
}

pub fn analyze_derivation_set(maps: &[SelfMap]) -> Result<SemilatticeReport> {
    let mut reps: Vec<&SelfMap> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, m) in maps.iter().enumerate() {
        if m.domain() != m.ambient() {
            return Err(Error::NotInvariant {
                label: m.label().to_string(),
            });
        }
        m.require_invariant()?;
        if let Some(first) = reps.first() {
            if first.domain() != m.domain() {
                return Err(Error::DomainMismatch);
            }
        }
        match reps.iter().position(|r| *r == m) {
            Some(j) => classes[j].push(i),
            None => {
                reps.push(m);
                classes.push(vec![i]);
            }
        }
    }
    let k = reps.len();
    let mut table = vec![vec![None; k]; k];
    for i in 0..k {
        for j in 0..k {
            let c = compose_maps(reps[i], reps[j])?;
            table[i][j] = reps.iter().position(|r| **r == c);
        }
    }
    let closed = table.iter().flatten().all(Option::is_some);
    let commutative = (0..k).all(|i| (0..k).all(|j| table[i][j] == table[j][i]));
    let non_idempotent: Vec<usize> = (0..k).filter(|&i| table[i][i] != Some(i)).collect();
    let identity =
        (0..k).find(|&e| (0..k).all(|j| table[e][j] == Some(j) && table[j][e] == Some(j)));
    let absorbing =
        (0..k).find(|&z| (0..k).all(|j| table[z][j] == Some(z) && table[j][z] == Some(z)));
    Ok(SemilatticeReport {
        closed,
        commutative,
        idempotent: non_idempotent.is_empty(),
        identity,
        absorbing,
        distinct_maps: k,
        representatives: reps.iter().map(|r| r.label().to_string()).collect(),
        classes,
        table,
        non_idempotent,
    })
}

/// How the iterates of one element behave under a closure computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    pub start: ChainEndomorphism,
    /// `x, d(x), d²(x), …` up to the first member of the ideal, or up to the
    /// first repeat when the orbit never reaches it.
    pub orbit: Vec<ChainEndomorphism>,
    /// Number of steps to enter the ideal.
    pub entered_at: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Closure {
    pub carrier: Carrier,
    pub traces: Vec<ClosureTrace>,
}

/// `∫_R I = {x ∈ R | dᵗ(x) ∈ I for some t ≥ 0}`.
///
/// Each orbit is followed until it reaches `I` or repeats an element; a
/// finite orbit repeats within `|R|` steps, so the result is exact.
pub fn differential_closure(r: &Carrier, ideal: &Carrier, d: &SelfMap) -> Result<Closure> {
    if !ideal.is_subset_of(r) {
        return Err(Error::NotASubset);
    }
    let d = d.restrict(r)?;
    d.require_invariant()?;
    let mut members = Vec::new();
    let mut traces = Vec::with_capacity(r.len());
    for x in r {
        let mut orbit = vec![x.clone()];
        let mut entered_at = None;
        loop {
            let cur = orbit.last().unwrap();
            if ideal.contains(cur) {
                entered_at = Some(orbit.len() - 1);
                break;
            }
            let next = d.apply(cur).unwrap().clone();
            if orbit.contains(&next) || orbit.len() > r.len() {
                orbit.push(next);
                break;
            }
            orbit.push(next);
        }
        if entered_at.is_some() {
            members.push(x.clone());
        }
        traces.push(ClosureTrace {
            start: x.clone(),
            orbit,
            entered_at,
        });
    }
    Ok(Closure {
        carrier: Carrier::new(r.chain(), members)?,
        traces,
    })
}

/// A pair breaking `dᵗ(x·y) = Σ_{k=0..t} d^{t-k}(x)·d^k(y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IteratedLeibnizWitness {
    pub order: usize,
    pub x: ChainEndomorphism,
    pub y: ChainEndomorphism,
    pub lhs: ChainEndomorphism,
    pub rhs: ChainEndomorphism,
}

/// Checks the iterated Leibniz rule of order `t`. Addition is idempotent, so
/// the binomial coefficients of the classical formula reduce to plain joins.
pub fn iterated_leibniz_check(d: &SelfMap, order: usize) -> Result<Option<IteratedLeibnizWitness>> {
    if order == 0 {
        return Err(Error::BadParams("order must be at least 1".into()));
    }
    if is_derivation(d)?.is_some() {
        return Err(Error::NotADerivation {
            label: d.label().to_string(),
        });
    }
    d.require_invariant()?;
    let powers = |x: &ChainEndomorphism| -> Vec<ChainEndomorphism> {
        (0..=order)
            .map(|t| d.iterate(x, t).expect("invariant"))
            .collect()
    };
    let dom = d.domain();
    let table: Vec<Vec<ChainEndomorphism>> = dom.iter().map(powers).collect();
    for (i, x) in dom.iter().enumerate() {
        for (j, y) in dom.iter().enumerate() {
            let lhs = d.iterate(&x.then(y), order).expect("invariant");
            let rhs = (0..=order)
                .map(|k| table[i][order - k].then(&table[j][k]))
                .reduce(|acc, t| acc.join(&t))
                .unwrap();
            if lhs != rhs {
                return Ok(Some(IteratedLeibnizWitness {
                    order,
                    x: x.clone(),
                    y: y.clone(),
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(None)
}

/// One row of [`delta_on_constants`]: anchor position `j` (1-based), the
/// constant `κ_{a_j}`, its image and the anchor the closed form predicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantRow {
    pub j: usize,
    pub constant: ChainEndomorphism,
    pub image: ChainEndomorphism,
    pub predicted: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantsReport {
    pub s: usize,
    pub l: usize,
    pub rows: Vec<ConstantRow>,
    /// First Leibniz failure of `δ_α` over pairs of constants.
    pub leibniz: Option<LeibnizWitness>,
}

impl ConstantsReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// `δ_{α_{s,ℓ}}` on the constants `κ_{a_1}, …, κ_{a_m}` of a string, against
/// the closed form: `κ_{a_j}` is fixed when `j ≥ ℓ + 1`; otherwise it goes to
/// `κ_{a_ℓ}` if `a_j ≤ n - s - 1` and to `κ_{a_{ℓ+1}}` if `a_j ≥ n - s`.
///
/// On the full string (`a_j = j - 1`) this reads: `κ_i ↦ κ_i` for `i ≥ ℓ`,
/// `κ_{ℓ-1}` for `i ≤ ℓ - 1, i ≤ n - s - 1`, and `κ_ℓ` for `i ≤ ℓ - 1, i ≥ n - s`.
pub fn delta_on_constants(alpha: &ChainEndomorphism, s: &StringTypeM) -> Result<ConstantsReport> {
    let idx = s.index_of(alpha).ok_or(Error::NotInString)?;
    let (k, l) = if idx.k() == 0 {
        (0, 1)
    } else {
        (idx.k(), idx.l())
    };
    let n = s.n();
    let co = s.constants_ideal();
    let rows = co
        .carrier
        .iter()
        .enumerate()
        .map(|(j0, c)| {
            let j = j0 + 1;
            let a_j = s.anchor(j);
            let predicted = if j > l {
                a_j
            } else if a_j + k < n {
                s.anchor(l)
            } else {
                s.anchor(l + 1)
            };
            let image = delta_value(alpha, c);
            ConstantRow {
                j,
                constant: c.clone(),
                matches: image.constant_value() == Some(predicted),
                image,
                predicted,
            }
        })
        .collect();
    let d = delta(alpha, &co.carrier)?;
    let leibniz = satisfies_leibniz(&d)?;
    Ok(ConstantsReport {
        s: k,
        l,
        rows,
        leibniz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;

    fn c(n: usize) -> Chain {
        Chain::new(n).unwrap()
    }

    fn e(images: &[usize]) -> ChainEndomorphism {
        c(images.len()).endomorphism(images).unwrap()
    }

    #[test]
    fn shift_examples() {
        let s = StringType2::new(c(4), 2, 3).unwrap();
        let d = shift_derivation(&s);
        assert_eq!(d.apply(s.element(3).unwrap()), Some(s.element(2).unwrap()));
        assert_eq!(d.apply(s.element(0).unwrap()), Some(s.element(0).unwrap()));
        let ds = s.subfamily(crate::strings::SubfamilyKind::DS).unwrap();
        let on_ds = d.restrict(&ds.carrier).unwrap();
        assert!(on_ds.is_invariant());
        assert_eq!(on_ds.images(), &[e(&[2, 2, 2, 2]), e(&[2, 2, 2, 2])]);
        assert_eq!(is_derivation(&on_ds).unwrap(), None);
    }

    #[test]
    fn delta_examples() {
        for n in 3..=7 {
            let s = StringType2::new(c(n), n - 2, n - 1).unwrap();
            let d = delta(s.element(0).unwrap(), s.carrier()).unwrap();
            assert_eq!(d.apply(s.element(2).unwrap()), Some(s.element(n).unwrap()));
        }
        let full = StringTypeM::full(c(4)).unwrap();
        let d = delta(full.element_at(3, 2).unwrap(), full.carrier()).unwrap();
        assert_eq!(d.apply(&e(&[1, 1, 1, 1])), Some(&e(&[2, 2, 2, 2])));
        for n in 2..=6 {
            for b in 1..n {
                let s = StringType2::new(c(n), 0, b).unwrap();
                let d = delta(s.element(n - b).unwrap(), s.carrier()).unwrap();
                assert_eq!(d, SelfMap::identity("id", s.carrier().clone()));
            }
        }
    }

    #[test]
    fn delta_escaping_ambient_is_an_error() {
        let s = StringType2::new(c(4), 2, 3).unwrap();
        let id = delta(&e(&[0, 1, 2, 3]), s.carrier()).unwrap();
        assert_eq!(id.images(), s.carrier().elements());
        let mid = Carrier::new(c(4), [s.element(2).unwrap().clone()]).unwrap();
        assert!(matches!(
            delta(s.element(4).unwrap(), &mid),
            Err(Error::EscapesAmbient { .. })
        ));
    }

    #[test]
    fn example_7_1_pair_breaks_leibniz() {
        let full = StringTypeM::full(c(4)).unwrap();
        let d = delta(&e(&[2, 2, 2, 2]), full.carrier()).unwrap();
        let w = leibniz_at(&d, &e(&[0, 0, 1, 1]), &e(&[2, 2, 3, 3]))
            .unwrap()
            .unwrap();
        assert_eq!(w.lhs, e(&[2, 2, 2, 2]));
        assert_eq!(w.rhs, e(&[3, 3, 3, 3]));
        assert!(satisfies_leibniz(&d).unwrap().is_some());
    }

    #[test]
    fn additive_on_chains() {
        let s = StringType2::new(c(5), 1, 3).unwrap();
        for alpha in s.carrier() {
            assert_eq!(
                is_additive(&delta(alpha, s.carrier()).unwrap()).unwrap(),
                None
            );
        }
        let d = shift_derivation(&s);
        assert_eq!(is_additive(&d).unwrap(), None);
    }

    #[test]
    fn leibniz_requires_closed_domain() {
        let s = StringType2::new(c(4), 1, 2).unwrap();
        let d = shift_derivation(&s);
        let odd = Carrier::new(c(4), [s.element(1).unwrap().clone()]).unwrap();
        let r = d.restrict(&odd).unwrap();
        assert!(matches!(
            satisfies_leibniz(&r),
            Err(Error::DomainNotClosed { .. })
        ));
    }

    #[test]
    fn compose_and_commute() {
        let s = StringType2::new(c(4), 1, 2).unwrap();
        let d1 = delta(s.element(1).unwrap(), s.carrier()).unwrap();
        let d0 = delta(s.element(0).unwrap(), s.carrier()).unwrap();
        assert_eq!(compose_maps(&d1, &d1).unwrap(), d0);
        let id = SelfMap::identity("id", s.carrier().clone());
        assert_eq!(compose_maps(&d1, &id).unwrap(), d1);
        assert_eq!(compose_maps(&id, &d1).unwrap(), d1);
        assert_eq!(maps_commute(&d1, &d1).unwrap(), None);
        let d = shift_derivation(&s);
        let ds = d
            .restrict(
                &s.subfamily(crate::strings::SubfamilyKind::DS)
                    .unwrap()
                    .carrier,
            )
            .unwrap();
        assert!(matches!(maps_commute(&d, &ds), Err(Error::DomainMismatch)));
    }

    #[test]
    fn example_5_4_table() {
        for n in 3..=7 {
            let s = StringType2::new(c(n), n - 2, n - 1).unwrap();
            let maps: Vec<_> = s
                .carrier()
                .iter()
                .map(|a| delta(a, s.carrier()).unwrap())
                .collect();
            let r = analyze_derivation_set(&maps).unwrap();
            assert_eq!(r.distinct_maps, 3);
            assert_eq!(r.classes[2], (2..=n).collect::<Vec<_>>());
            let t = |i: usize, j: usize| r.table[i][j].unwrap();
            assert_eq!(t(0, 0), 0);
            assert_eq!(t(0, 1), 0);
            assert_eq!(t(1, 1), 1);
            assert_eq!(t(0, 2), 2);
            assert_eq!(t(1, 2), 2);
            assert_eq!(t(2, 2), 2);
            assert_eq!(r.identity, Some(1));
            assert_eq!(r.absorbing, Some(2));
            assert!(r.closed && r.commutative && r.idempotent);
        }
    }

    #[test]
    fn analyze_rejects_non_invariant_maps() {
        let s = StringType2::new(c(4), 1, 2).unwrap();
        let ds = s
            .subfamily(crate::strings::SubfamilyKind::DS)
            .unwrap()
            .carrier;
        let d = delta_into(s.element(4).unwrap(), &ds, s.carrier()).unwrap();
        assert!(matches!(
            analyze_derivation_set(&[d]),
            Err(Error::NotInvariant { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let s = StringType2::new(c(5), 1, 3).unwrap();
        let d0 = delta(s.element(0).unwrap(), s.carrier()).unwrap();
        let co = s.constants_ideal().carrier;
        let all = differential_closure(s.carrier(), &co, &d0).unwrap();
        assert_eq!(&all.carrier, s.carrier());
        let d2 = delta(s.element(2).unwrap(), s.carrier()).unwrap();
        let with_nb = differential_closure(s.carrier(), &co, &d2).unwrap();
        assert_eq!(
            with_nb.carrier.positions_in(s.carrier()).unwrap(),
            vec![0, 4, 5]
        );
        let t = &with_nb.traces[1];
        assert_eq!(t.entered_at, None);
        assert_eq!(t.orbit.len(), 2);
        assert_eq!(with_nb.traces[4].entered_at, Some(1));
        let s0 = StringType2::new(c(5), 0, 3).unwrap();
        let co0 = s0.constants_ideal().carrier;
        let d = delta(s0.element(2).unwrap(), s0.carrier()).unwrap();
        assert_eq!(
            differential_closure(s0.carrier(), &co0, &d)
                .unwrap()
                .carrier,
            co0
        );
        let stray = Carrier::new(c(5), [e(&[0, 0, 0, 0, 0])]).unwrap();
        assert_eq!(
            differential_closure(s.carrier(), &stray, &d0).unwrap_err(),
            Error::NotASubset
        );
    }

    #[test]
    fn iterated_leibniz_examples() {
        let s = StringType2::new(c(6), 2, 4).unwrap();
        let ds = s
            .subfamily(crate::strings::SubfamilyKind::DS)
            .unwrap()
            .carrier;
        let d = shift_derivation(&s).restrict(&ds).unwrap();
        for t in 1..=3 {
            assert_eq!(iterated_leibniz_check(&d, t).unwrap(), None);
        }
        let full = shift_derivation(&s);
        assert!(matches!(
            iterated_leibniz_check(&full, 2),
            Err(Error::NotADerivation { .. })
        ));
        assert!(matches!(
            iterated_leibniz_check(&d, 0),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn constants_example_7_4() {
        let full = StringTypeM::full(c(4)).unwrap();
        let alpha = full.element_at(3, 2).unwrap();
        let r = delta_on_constants(alpha, &full).unwrap();
        assert!(r.all_match());
        assert_eq!(r.rows[1].image, e(&[2, 2, 2, 2]));
        assert_eq!(r.leibniz, None);
        assert_eq!(
            delta_on_constants(&e(&[0, 1, 2, 3]), &full).unwrap_err(),
            Error::NotInString
        );
    }
}
