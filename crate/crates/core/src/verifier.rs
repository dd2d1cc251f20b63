//! Executable checks for the claims about strings and their derivations, each
//! run exhaustively over a parameter range.
//!
//! A check computes its expected values by brute force from
//! [`ChainEndomorphism::then`] and [`ChainEndomorphism::join`] and compares
//! them with the library's closed forms. A failing check always carries a
//! witness.
//!
//! Claims are identified by short opaque IDs such as `"3.2"` or `"4.1a"`;
//! [`ClaimId::ALL`] lists them in registry order.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::chain::{check_semiring_axioms, Carrier, Chain, ChainEndomorphism};
use crate::derivations::{
    analyze_derivation_set, compose_maps, delta, delta_into, delta_on_constants, delta_value,
    differential_closure, is_derivation, iterated_leibniz_check, jordan_witness_on, leibniz_at,
    leibniz_witness_on, maps_commute, satisfies_leibniz, shift_derivation, Closure,
    DerivationFailure, LeibnizWitness, SelfMap,
};
use crate::error::{Error, Result};
use crate::strings::{is_ideal, Classification, StringType2, StringTypeM, SubfamilyKind};

macro_rules! claims {
    ($($variant:ident => $id:literal, $summary:literal;)*) => {
        /// A registered claim.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId {
            $(#[doc = $summary] $variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $id,)*
                }
            }

            pub fn summary(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $summary,)*
                }
            }
        }

        impl FromStr for ClaimId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($id => Ok(ClaimId::$variant),)*
                    other => Err(Error::UnknownClaim(other.to_string())),
                }
            }
        }
    };
}

claims! {
    StringSubsemiring => "3.1", "STR{a,b} is a subsemiring of the endomorphism semiring";
    ProductBands => "3.2", "products in STR{a,b} follow the three index bands";
    SquaringClasses => "3.3", "N_a, N_b and Id are the a-nilpotent, b-nilpotent and idempotent subsemirings";
    LowerHalf => "3.4", "S = N_a + Id is a subsemiring";
    UpperHalf => "3.5", "T = Id + N_b is a subsemiring";
    ShiftDomain => "4.1a", "DS is a subsemiring of S";
    ShiftDerivation => "4.1b", "the shift D is a derivation on DS";
    ShiftMaximal => "4.2", "DS is the largest subsemiring on which D is a derivation";
    DifferentialIdeals => "4.3", "I_0 < I_1 < ... < N_a is a chain of differential ideals of DS";
    ClosureSubsemiring => "4.4", "every differential closure is a differential subsemiring";
    ShiftClosure => "4.5", "the closure of every I_j in DS under D is DS";
    DeltaDerivation => "5.1", "every delta map is a derivation of STR{a,b}";
    DeltaCommute => "5.2", "all delta maps on STR{a,b} commute";
    ZeroAnchorFamily => "5.3", "on STR{0,b} the deltas of idempotents form a semilattice with identity delta_{n-b}";
    TopAnchorsTable => "5.4", "on STR{n-2,n-1} there are three deltas composing as [[0,0,2],[0,1,2],[2,2,2]]";
    DeltaSemilattice => "5.5", "the deltas of STR{a,b} form a semigroup with identity delta_{n-b} and absorbing delta_{n-a}";
    DeltaClosures => "5.6", "closures of {alpha_0, alpha_n} under each delta";
    TypeMSubsemiring => "6.1", "every string of type m is a subsemiring";
    SubStrings => "6.2", "strings over anchor subsets are subsemirings of the larger string";
    TypeMProductBands => "6.3", "products in a string of type m follow the double-index bands";
    ConstantsIdeal => "6.4", "the constants form an ideal of every string of type m";
    TypeMDeltaFails => "7.1", "delta maps on strings of type m need not be derivations";
    ConstantsDelta => "7.2", "delta maps on the constants follow the three-case rule and are derivations there";
    MixedSet => "7.3", "CO + STR{n-2,n-1} is a subsemiring invariant under every delta";
    MixedSetDeltaFails => "7.4", "delta maps on CO + STR{n-2,n-1} need not be derivations";
    TopDeltaValues => "7.5", "closed form of delta_{alpha_{s,n-1}} on the lower pieces";
    TopDeltaAbsorption => "7.6", "the d(x)y term is absorbed by x d(y) for the top-piece deltas";
    TopDeltaDerivation => "7.7", "delta_{alpha_{s,n-1}}, s >= 2, is a derivation of the full string";
    TopDeltaClosure => "7.8", "the closure of the constants under delta_{alpha_{s,n-1}}, s >= 2, is the full string";
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for ClaimId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `"all"` or a comma-separated list of claim IDs.
pub fn parse_claim_filter(filter: &str) -> Result<Vec<ClaimId>> {
    if filter.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut ids: Vec<ClaimId> = filter
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

/// Parameters of a check. Unset fields are exhausted over their legal range.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchors: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params {
            n,
            ..Params::default()
        }
    }

    pub fn with_anchors(n: usize, a: usize, b: usize) -> Self {
        Params {
            n,
            a: Some(a),
            b: Some(b),
            ..Params::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub role: String,
    pub value: ChainEndomorphism,
}

/// A structured counterexample or reproduced example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub summary: String,
    pub entries: Vec<WitnessEntry>,
}

impl Witness {
    fn new(summary: impl Into<String>, entries: &[(&str, &ChainEndomorphism)]) -> Self {
        Witness {
            summary: summary.into(),
            entries: entries
                .iter()
                .map(|(role, value)| WitnessEntry {
                    role: role.to_string(),
                    value: (*value).clone(),
                })
                .collect(),
        }
    }

    fn leibniz(summary: impl Into<String>, w: &LeibnizWitness) -> Self {
        Witness::new(
            summary,
            &[("x", &w.x), ("y", &w.y), ("lhs", &w.lhs), ("rhs", &w.rhs)],
        )
    }

    fn failure(summary: impl Into<String>, f: &DerivationFailure) -> Self {
        match f {
            DerivationFailure::NotAdditive(w) => {
                Witness::leibniz(format!("{} (additivity)", summary.into()), w)
            }
            DerivationFailure::Leibniz(w) => {
                Witness::leibniz(format!("{} (Leibniz)", summary.into()), w)
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary)?;
        for e in &self.entries {
            write!(f, "; {}={}", e.role, e.value)?;
        }
        Ok(())
    }
}

/// An informational side finding attached to a result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Note {
    pub topic: String,
    pub finding: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn serialize_ms<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationResult {
    pub claim: ClaimId,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Note>,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_ms")]
    pub elapsed: Duration,
}

impl VerificationResult {
    /// Equality ignoring the elapsed time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.claim == other.claim
            && self.params == other.params
            && self.status == other.status
            && self.witness == other.witness
            && self.detail == other.detail
            && self.notes == other.notes
    }
}

struct Outcome {
    status: Status,
    witness: Option<Witness>,
    detail: String,
    notes: Vec<Note>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }

    fn fail(witness: Witness, detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Fail,
            witness: Some(witness),
            detail: detail.into(),
            notes: Vec::new(),
        }
    }

    fn info(detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Info,
            witness: None,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    fn note(mut self, topic: &str, finding: impl Into<String>, witness: Option<Witness>) -> Self {
        self.notes.push(Note {
            topic: topic.into(),
            finding: finding.into(),
            witness,
        });
        self
    }
}

/// Early return of a failing outcome.
macro_rules! fail {
    ($witness:expr, $($fmt:tt)*) => {
        return Ok(Outcome::fail($witness, format!($($fmt)*)))
    };
}

struct Ctx<'a> {
    n: usize,
    chain: Chain,
    params: &'a Params,
}

impl Ctx<'_> {
    fn anchor_pairs(&self) -> Result<Vec<(usize, usize)>> {
        match (self.params.a, self.params.b) {
            (Some(a), Some(b)) => {
                if a >= b || b >= self.n {
                    return Err(Error::BadParams(format!(
                        "need 0 <= a < b <= n-1, got a={a}, b={b}, n={}",
                        self.n
                    )));
                }
                Ok(vec![(a, b)])
            }
            (None, None) => Ok((1..self.n)
                .flat_map(|b| (0..b).map(move |a| (a, b)))
                .collect()),
            _ => Err(Error::BadParams("give both a and b or neither".into())),
        }
    }

    fn strings2(&self) -> Result<Vec<StringType2>> {
        self.anchor_pairs()?
            .into_iter()
            .map(|(a, b)| StringType2::new(self.chain, a, b))
            .collect()
    }

    /// All anchor sets of size at least two, in lexicographic order, or the
    /// single set given in the parameters.
    fn anchor_sets(&self) -> Result<Vec<Vec<usize>>> {
        if let Some(anchors) = &self.params.anchors {
            StringTypeM::new(self.chain, anchors).map_err(|e| Error::BadParams(e.to_string()))?;
            return Ok(vec![anchors.clone()]);
        }
        let mut sets: Vec<Vec<usize>> = (0u32..1 << self.n)
            .filter(|m| m.count_ones() >= 2)
            .map(|m| (0..self.n).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        sets.sort();
        Ok(sets)
    }

    fn full(&self) -> StringTypeM {
        StringTypeM::full(self.chain).expect("n >= 2")
    }

    /// The values of `s` to try for the top-piece claims, `lo..=n` by default.
    fn top_s(&self, lo: usize) -> Result<Vec<usize>> {
        match self.params.s {
            Some(s) if s < lo || s > self.n => Err(Error::BadParams(format!(
                "s must lie in {lo}..={}, got {s}",
                self.n
            ))),
            Some(s) => Ok(vec![s]),
            None => Ok((lo..=self.n).collect()),
        }
    }
}

fn ab(s: &StringType2) -> String {
    format!("STR{{{},{}}}", s.a(), s.b())
}

fn anchor_label(anchors: &[usize]) -> String {
    let parts: Vec<String> = anchors.iter().map(usize::to_string).collect();
    format!("STR{{{}}}", parts.join(","))
}

fn first_closure_failure(c: &Carrier) -> Option<Witness> {
    for x in c {
        for y in c {
            let sum = x.join(y);
            if !c.contains(&sum) {
                return Some(Witness::new(
                    "sum leaves the set",
                    &[("x", x), ("y", y), ("x+y", &sum)],
                ));
            }
            let prod = x.then(y);
            if !c.contains(&prod) {
                return Some(Witness::new(
                    "product leaves the set",
                    &[("x", x), ("y", y), ("x*y", &prod)],
                ));
            }
        }
    }
    None
}

fn axioms_witness(c: &Carrier, what: &str) -> Option<Witness> {
    let report = check_semiring_axioms(c);
    report.first_failure().map(|(law, check)| {
        let elems = check.witness.clone().unwrap_or_default();
        let names = ["x", "y", "z"];
        let entries: Vec<(&str, &ChainEndomorphism)> =
            names.iter().copied().zip(elems.iter()).collect();
        Witness::new(format!("{what}: {law} fails"), &entries)
    })
}

fn positions(s: &StringType2, kind: SubfamilyKind) -> Vec<usize> {
    s.subfamily_range(kind).expect("legal kind")
}

fn check_string_subsemiring(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    for s in &strings {
        if let Some(w) = axioms_witness(s.carrier(), &ab(s)) {
            fail!(w, "{} is not a subsemiring", ab(s));
        }
        let expected_len = ctx.n + 1;
        if s.len() != expected_len || !s.carrier().is_chain() {
            fail!(
                Witness::new(format!("{} has {} elements", ab(s), s.len()), &[]),
                "{} is not an {}-element chain",
                ab(s),
                expected_len
            );
        }
    }
    let mut out = Outcome::pass(format!(
        "{} strings, all semiring laws hold exhaustively",
        strings.len()
    ));
    // Elements of the string that fix neither anchor lie outside E^(a) ∩ E^(b).
    let outside = strings.iter().find_map(|s| {
        s.carrier()
            .iter()
            .find(|f| !(f.fixes(s.a()) && f.fixes(s.b())))
            .map(|f| (s, f.clone()))
    });
    match outside {
        Some((s, f)) => {
            let which = if f.fixes(s.b()) {
                format!("fixes {} but not {}", s.b(), s.a())
            } else if f.fixes(s.a()) {
                format!("fixes {} but not {}", s.a(), s.b())
            } else {
                "fixes neither anchor".to_string()
            };
            out = out.note(
                "anchor-fixing maps",
                format!(
                    "{} is not contained in the maps fixing both anchors: {f} {which}",
                    ab(s)
                ),
                Some(Witness::new(which, &[("element", &f)])),
            );
        }
        None => {
            out = out.note(
                "anchor-fixing maps",
                "every element fixes both anchors",
                None,
            );
        }
    }
    if ctx.n == 4 {
        let f = ctx.chain.endomorphism(&[2, 2, 3, 3])?;
        out = out.note(
            "anchor-fixing maps",
            format!("{f} fixes 3: {}, fixes 2: {}", f.fixes(3), f.fixes(2)),
            None,
        );
    }
    Ok(out)
}

fn check_product_bands(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    let mut pairs = 0;
    for s in &strings {
        for k in 0..=ctx.n {
            for t in 0..=ctx.n {
                let x = s.element(k)?;
                let y = s.element(t)?;
                let product = x.then(y);
                let got = s.mul_index(k, t)?;
                if s.index_of(&product) != Some(got) {
                    fail!(
                        Witness::new(
                            format!("{}: band formula gives a_{got} for a_{k}*a_{t}", ab(s)),
                            &[
                                ("x", x),
                                ("y", y),
                                ("product", &product),
                                ("formula", s.element(got)?)
                            ],
                        ),
                        "band formula disagrees with composition"
                    );
                }
                pairs += 1;
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{pairs} products over {} strings match composition",
        strings.len()
    )))
}

fn behavioural_class(s: &StringType2, k: usize) -> Option<Classification> {
    let x = s.element(k).ok()?;
    let sq = x.then(x);
    if &sq == s.element(0).ok()? {
        Some(Classification::ANilpotent)
    } else if &sq == s.element(s.n()).ok()? {
        Some(Classification::BNilpotent)
    } else if &sq == x {
        Some(Classification::Idempotent)
    } else {
        None
    }
}

fn check_squaring_classes(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    for s in &strings {
        for k in 0..=ctx.n {
            let by_square = behavioural_class(s, k);
            let by_range = [
                (SubfamilyKind::ANilpotents, Classification::ANilpotent),
                (SubfamilyKind::Idempotents, Classification::Idempotent),
                (SubfamilyKind::BNilpotents, Classification::BNilpotent),
            ]
            .into_iter()
            .find(|(kind, _)| positions(s, *kind).contains(&k))
            .map(|(_, c)| c);
            if by_square != by_range || s.classify(k).ok() != by_range {
                let x = s.element(k)?;
                fail!(
                    Witness::new(
                        format!(
                            "{}: a_{k} squares as {by_square:?}, range says {by_range:?}",
                            ab(s)
                        ),
                        &[("x", x), ("x*x", &x.then(x))],
                    ),
                    "index range and squaring disagree"
                );
            }
        }
        for kind in [
            SubfamilyKind::ANilpotents,
            SubfamilyKind::BNilpotents,
            SubfamilyKind::Idempotents,
        ] {
            let sub = s.subfamily(kind)?;
            if let Some(w) = axioms_witness(&sub.carrier, &format!("{kind} of {}", ab(s))) {
                fail!(w, "{kind} is not a subsemiring");
            }
        }
    }
    let mut out = Outcome::pass(format!(
        "{} strings: ranges match squaring, all three families closed",
        strings.len()
    ));
    if ctx.n <= 7 {
        let all = ctx.chain.all_endomorphisms();
        let idem = all.filter(ChainEndomorphism::is_idempotent);
        let note = match first_closure_failure(&idem) {
            Some(w) => (
                format!(
                    "the {} idempotents of the endomorphism semiring are not closed",
                    idem.len()
                ),
                Some(w),
            ),
            None => (
                format!("the {} idempotents are closed at this size", idem.len()),
                None,
            ),
        };
        out = out.note("all idempotents", note.0, note.1);
    }
    Ok(out)
}

fn check_half(ctx: &Ctx, whole: SubfamilyKind, parts: [SubfamilyKind; 2]) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    for s in &strings {
        let sub = s.subfamily(whole)?;
        if let Some(w) = axioms_witness(&sub.carrier, &format!("{whole} of {}", ab(s))) {
            fail!(w, "{whole} is not a subsemiring");
        }
        let mut joined = positions(s, parts[0]);
        joined.extend(positions(s, parts[1]));
        if joined != sub.positions {
            fail!(
                Witness::new(
                    format!(
                        "{}: {whole} is not {} followed by {}",
                        ab(s),
                        parts[0],
                        parts[1]
                    ),
                    &[]
                ),
                "not a disjoint union"
            );
        }
    }
    Ok(Outcome::pass(format!(
        "{} strings: {whole} closed and equal to {} + {}",
        strings.len(),
        parts[0],
        parts[1]
    )))
}

fn check_shift_domain(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    for s in &strings {
        let ds = s.subfamily(SubfamilyKind::DS)?;
        if let Some(w) = axioms_witness(&ds.carrier, &format!("DS of {}", ab(s))) {
            fail!(w, "DS is not a subsemiring");
        }
        let sab = s.subfamily(SubfamilyKind::S)?;
        if !ds.carrier.is_subset_of(&sab.carrier) {
            fail!(
                Witness::new(format!("{}: DS is not inside S", ab(s)), &[]),
                "DS is not contained in S"
            );
        }
    }
    Ok(Outcome::pass(format!(
        "{} strings: DS closed inside S",
        strings.len()
    )))
}

fn shift_on_ds(s: &StringType2) -> Result<SelfMap> {
    shift_derivation(s).restrict(&s.subfamily(SubfamilyKind::DS)?.carrier)
}

fn check_shift_derivation(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    for s in &strings {
        let d = shift_on_ds(s)?;
        if !d.is_invariant() {
            fail!(
                Witness::new(format!("{}: D leaves DS", ab(s)), &[]),
                "D does not map DS into itself"
            );
        }
        if let Some(f) = is_derivation(&d)? {
            fail!(
                Witness::failure(format!("{}: D on DS", ab(s)), &f),
                "D is not a derivation on DS"
            );
        }
    }
    Ok(Outcome::pass(format!(
        "{} strings: D is additive and Leibniz on DS",
        strings.len()
    )))
}

fn check_shift_maximal(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    let mut extensions = 0;
    for s in &strings {
        let d_ds = shift_on_ds(s)?;
        if let Some(f) = is_derivation(&d_ds)? {
            fail!(
                Witness::failure(format!("{}: D on DS", ab(s)), &f),
                "D is not a derivation on DS"
            );
        }
        let d = shift_derivation(s);
        let ds = s.subfamily(SubfamilyKind::DS)?.carrier;
        for k in ctx.n - s.b() + 1..=ctx.n {
            let alpha_k = s.element(k)?;
            let ext = ds.union(&Carrier::new(ctx.chain, [alpha_k.clone()])?)?;
            let first = leibniz_witness_on(&d, &ext)?;
            let jordan = jordan_witness_on(&d, &ext)?;
            match (first, jordan) {
                (Some(_), Some(j)) if &j.x == alpha_k => {}
                (_, j) => {
                    let summary = format!("{}: D stays a derivation on DS + a_{k}", ab(s));
                    let w = match j {
                        Some(j) => Witness::leibniz(summary, &j),
                        None => Witness::new(summary, &[("added", alpha_k)]),
                    };
                    fail!(w, "extension of DS by a_{k} has no (a_k, a_k) witness");
                }
            }
            extensions += 1;
        }
    }
    let mut out = Outcome::pass(format!(
        "{extensions} one-element extensions of DS, each broken at (a_k, a_k)"
    ));
    if let Some(s) = strings.iter().find(|s| s.b() < ctx.n) {
        let k = ctx.n - s.b() + 1;
        if k <= ctx.n {
            let d = shift_derivation(s);
            let ext = s
                .subfamily(SubfamilyKind::DS)?
                .carrier
                .union(&Carrier::new(ctx.chain, [s.element(k)?.clone()])?)?;
            if let Some(w) = leibniz_witness_on(&d, &ext)? {
                out = out.note(
                    "first witness",
                    format!(
                        "{} with a_{k} added: first failing pair in carrier order",
                        ab(s)
                    ),
                    Some(Witness::leibniz("D(xy) != D(x)y + xD(y)", &w)),
                );
            }
        }
    }
    Ok(out)
}

fn check_differential_ideals(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    let mut ideals = 0;
    for s in &strings {
        let ds = s.subfamily(SubfamilyKind::DS)?.carrier;
        let d = shift_on_ds(s)?;
        let top = ctx.n - s.b() - 1;
        let mut prev: Option<Carrier> = None;
        for j in 0..=top {
            let ij = s.subfamily(SubfamilyKind::DifferentialIdeal(j))?.carrier;
            if let Some(w) = is_ideal(&ij, &ds)? {
                fail!(
                    Witness::new(
                        format!("{}: I_{j} is not an ideal of DS ({})", ab(s), w.rule),
                        &[
                            ("left", &w.left),
                            ("right", &w.right),
                            ("result", &w.result)
                        ],
                    ),
                    "I_{j} is not an ideal"
                );
            }
            if let Some(x) = ij.iter().find(|x| !ij.contains(d.apply(x).unwrap())) {
                fail!(
                    Witness::new(
                        format!("{}: D leaves I_{j}", ab(s)),
                        &[("x", x), ("D(x)", d.apply(x).unwrap())]
                    ),
                    "I_{j} is not D-invariant"
                );
            }
            if let Some(p) = &prev {
                if !(p.is_subset_of(&ij) && p.len() < ij.len()) {
                    fail!(
                        Witness::new(format!("{}: I_{} not inside I_{j}", ab(s), j - 1), &[]),
                        "not a chain"
                    );
                }
            }
            prev = Some(ij);
            ideals += 1;
        }
        let na = s.subfamily(SubfamilyKind::ANilpotents)?.carrier;
        if prev.as_ref() != Some(&na) {
            fail!(
                Witness::new(format!("{}: last I_j differs from N_a", ab(s)), &[]),
                "chain does not end at N_a"
            );
        }
    }
    Ok(Outcome::pass(format!(
        "{ideals} ideals I_j, each a D-invariant ideal of DS, strictly nested up to N_a"
    )))
}

/// Checks that a computed closure is closed under addition, multiplication
/// and the map.
fn closure_is_differential(c: &Closure, d: &SelfMap) -> Option<Witness> {
    if let Some(w) = first_closure_failure(&c.carrier) {
        return Some(w);
    }
    c.carrier.iter().find_map(|x| {
        let dx = d.apply(x)?;
        (!c.carrier.contains(dx))
            .then(|| Witness::new("the map leaves the closure", &[("x", x), ("d(x)", dx)]))
    })
}

fn check_closure_subsemiring(ctx: &Ctx) -> Result<Outcome> {
    let mut closures = 0;
    let mut iterated = 0;
    for s in &ctx.strings2()? {
        let ds = s.subfamily(SubfamilyKind::DS)?.carrier;
        let d = shift_on_ds(s)?;
        for j in 0..ctx.n - s.b() {
            let ij = s.subfamily(SubfamilyKind::DifferentialIdeal(j))?.carrier;
            let c = differential_closure(&ds, &ij, &d)?;
            if let Some(w) = closure_is_differential(&c, &d) {
                fail!(
                    w,
                    "{}: closure of I_{j} under D is not a differential subsemiring",
                    ab(s)
                );
            }
            closures += 1;
        }
        for order in 2..=3 {
            if let Some(w) = iterated_leibniz_check(&d, order)? {
                fail!(
                    Witness::new(
                        format!("{}: order-{order} Leibniz rule fails for D", ab(s)),
                        &[("x", &w.x), ("y", &w.y), ("lhs", &w.lhs), ("rhs", &w.rhs)],
                    ),
                    "iterated Leibniz rule fails"
                );
            }
            iterated += 1;
        }
        let co = s.constants_ideal().carrier;
        for alpha in s.carrier() {
            let dm = delta(alpha, s.carrier())?;
            let c = differential_closure(s.carrier(), &co, &dm)?;
            if let Some(w) = closure_is_differential(&c, &dm) {
                fail!(
                    w,
                    "{}: closure under {} is not a differential subsemiring",
                    ab(s),
                    dm.label()
                );
            }
            closures += 1;
        }
    }
    if ctx.params.a.is_none() {
        let full = ctx.full();
        let co = full.constants_ideal().carrier;
        for s in 2..=ctx.n {
            let dm = delta(full.element_at(s, ctx.n - 1)?, full.carrier())?;
            let c = differential_closure(full.carrier(), &co, &dm)?;
            if let Some(w) = closure_is_differential(&c, &dm) {
                fail!(
                    w,
                    "full string: closure under {} is not a differential subsemiring",
                    dm.label()
                );
            }
            closures += 1;
        }
    }
    Ok(Outcome::pass(format!(
        "{closures} closures closed under +, * and the map; {iterated} iterated Leibniz checks for D"
    )))
}

fn check_shift_closure(ctx: &Ctx) -> Result<Outcome> {
    let mut count = 0;
    for s in &ctx.strings2()? {
        let ds = s.subfamily(SubfamilyKind::DS)?.carrier;
        let d = shift_on_ds(s)?;
        for j in 0..ctx.n - s.b() {
            let ij = s.subfamily(SubfamilyKind::DifferentialIdeal(j))?.carrier;
            let c = differential_closure(&ds, &ij, &d)?;
            if c.carrier != ds {
                let missing = ds.iter().find(|x| !c.carrier.contains(x)).unwrap();
                fail!(
                    Witness::new(
                        format!("{}: closure of I_{j} misses an element of DS", ab(s)),
                        &[("x", missing)]
                    ),
                    "closure of I_{j} is not DS"
                );
            }
            count += 1;
        }
    }
    Ok(Outcome::pass(format!("{count} closures, each equal to DS")))
}

fn deltas(s: &StringType2) -> Result<Vec<SelfMap>> {
    (0..=s.n())
        .map(|k| Ok(delta(s.element(k)?, s.carrier())?.with_label(format!("delta_{k}"))))
        .collect()
}

fn check_delta_derivation(ctx: &Ctx) -> Result<Outcome> {
    let mut maps = 0;
    for s in &ctx.strings2()? {
        for d in deltas(s)? {
            if let Some(f) = is_derivation(&d)? {
                fail!(
                    Witness::failure(format!("{}: {}", ab(s), d.label()), &f),
                    "{} is not a derivation",
                    d.label()
                );
            }
            maps += 1;
        }
    }
    Ok(Outcome::pass(format!("{maps} delta maps, all derivations")))
}

fn check_delta_commute(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    let mut pairs = 0;
    let (mut shift_pairs, mut shift_commuting) = (0, 0);
    let mut shift_witness = None;
    for s in &strings {
        let ds = deltas(s)?;
        for (i, d1) in ds.iter().enumerate() {
            for d2 in &ds[i..] {
                if let Some(w) = maps_commute(d1, d2)? {
                    fail!(
                        Witness::new(
                            format!(
                                "{}: {} and {} do not commute",
                                ab(s),
                                d1.label(),
                                d2.label()
                            ),
                            &[
                                ("x", &w.x),
                                ("first(second(x))", &w.first_second),
                                ("second(first(x))", &w.second_first)
                            ],
                        ),
                        "delta maps do not commute"
                    );
                }
                pairs += 1;
            }
        }
        let shift = shift_on_ds(s)?;
        let domain = shift.domain().clone();
        for d in &ds {
            let r = d.restrict(&domain)?;
            if !r.is_invariant() {
                continue;
            }
            shift_pairs += 1;
            match maps_commute(&shift, &r)? {
                None => shift_commuting += 1,
                Some(w) => {
                    shift_witness.get_or_insert_with(|| {
                        Witness::new(
                            format!("{}: D and {} on DS", ab(s), d.label()),
                            &[
                                ("x", &w.x),
                                ("D(delta(x))", &w.first_second),
                                ("delta(D(x))", &w.second_first),
                            ],
                        )
                    });
                }
            }
        }
    }
    Ok(Outcome::pass(format!("{pairs} pairs of delta maps commute")).note(
        "shift versus delta",
        format!("on DS, D commutes with {shift_commuting} of the {shift_pairs} delta maps that preserve DS"),
        shift_witness,
    ))
}

fn check_zero_anchor_family(ctx: &Ctx) -> Result<Outcome> {
    let bs: Vec<usize> = match (ctx.params.a, ctx.params.b) {
        (Some(0), Some(b)) if b >= 1 && b < ctx.n => vec![b],
        (None, None) => (1..ctx.n).collect(),
        _ => {
            return Err(Error::BadParams(
                "this claim needs a = 0 and 1 <= b <= n-1".into(),
            ))
        }
    };
    for &b in &bs {
        let s = StringType2::new(ctx.chain, 0, b)?;
        let nb = positions(&s, SubfamilyKind::BNilpotents);
        if nb != vec![ctx.n] {
            fail!(
                Witness::new(format!("{}: N_b has {} elements", ab(&s), nb.len()), &[]),
                "N_b is not {{a_n}}"
            );
        }
        let all = deltas(&s)?;
        let id_map = SelfMap::identity("id", s.carrier().clone());
        if all[ctx.n - b] != id_map {
            let (x, y) = all[ctx.n - b].pairs().find(|(x, y)| x != y).unwrap();
            fail!(
                Witness::new(
                    format!("{}: delta_{} moves an element", ab(&s), ctx.n - b),
                    &[("x", x), ("delta(x)", y)]
                ),
                "delta_(n-b) is not the identity map"
            );
        }
        let family: Vec<SelfMap> = positions(&s, SubfamilyKind::Idempotents)
            .into_iter()
            .map(|k| all[k].clone())
            .collect();
        let r = analyze_derivation_set(&family)?;
        if !(r.closed
            && r.commutative
            && r.idempotent
            && r.identity == Some(0)
            && r.distinct_maps == b)
        {
            fail!(
                Witness::new(format!("{}: {r:?}", ab(&s)), &[]),
                "deltas of idempotents are not a semilattice with identity delta_(n-b)"
            );
        }
        for (i, dl) in family.iter().enumerate() {
            for dm in &family[i..] {
                if compose_maps(dm, dl)? != *dm {
                    fail!(
                        Witness::new(
                            format!(
                                "{}: {} after {} is not {}",
                                ab(&s),
                                dm.label(),
                                dl.label(),
                                dm.label()
                            ),
                            &[]
                        ),
                        "larger delta does not absorb the smaller"
                    );
                }
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} strings STR{{0,b}}: delta_(n-b) is the identity map, deltas of idempotents form a semilattice, larger index wins",
        bs.len()
    )))
}

fn check_top_anchors_table(ctx: &Ctx) -> Result<Outcome> {
    if ctx.params.a.is_some() || ctx.params.b.is_some() {
        return Err(Error::BadParams("this claim fixes a = n-2, b = n-1".into()));
    }
    let n = ctx.n;
    let s = StringType2::new(ctx.chain, n - 2, n - 1)?;
    let maps = deltas(&s)?;
    let r = analyze_derivation_set(&maps)?;
    let expected_classes = vec![vec![0], vec![1], (2..=n).collect::<Vec<_>>()];
    let expected = [[0, 0, 2], [0, 1, 2], [2, 2, 2]];
    let table_ok = r.distinct_maps == 3
        && (0..3).all(|i| (0..3).all(|j| r.table[i][j] == Some(expected[i][j])));
    if r.classes != expected_classes || !table_ok {
        fail!(
            Witness::new(
                format!("{}: classes {:?}, table {:?}", ab(&s), r.classes, r.table),
                &[]
            ),
            "table differs from the expected 3x3 table"
        );
    }
    let (a0, a1, an) = (s.element(0)?, s.element(1)?, s.element(n)?);
    let rows: [(usize, [&ChainEndomorphism; 3]); 3] =
        [(0, [a0, a0, an]), (1, [a0, a1, an]), (2, [an, an, an])];
    for (l, row) in rows {
        for (k, want) in row.iter().enumerate() {
            let got = maps[l].apply(s.element(k)?).unwrap();
            if got != *want {
                fail!(
                    Witness::new(
                        format!("delta_{l}(a_{k})"),
                        &[("got", got), ("expected", want)]
                    ),
                    "value row differs"
                );
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{}: deltas collapse to {{delta_0}}, {{delta_1}}, {{delta_2..delta_{n}}}; table [[0,0,2],[0,1,2],[2,2,2]]",
        ab(&s)
    )))
}

/// The composition rule of the delta maps, on representatives
/// `0..=n-a`.
fn semilattice_rule(i: usize, j: usize, n: usize, a: usize, b: usize) -> usize {
    let (lo, top) = (n - b, n - a);
    if i == top || j == top {
        top
    } else if i < lo && j < lo {
        0
    } else if i < lo {
        i
    } else if j < lo {
        j
    } else {
        i.max(j)
    }
}

fn check_delta_semilattice(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    let mut non_idempotent = 0;
    let mut first_square: Option<Witness> = None;
    for s in &strings {
        let (n, a, b) = (ctx.n, s.a(), s.b());
        let r = analyze_derivation_set(&deltas(s)?)?;
        let mut classes: Vec<Vec<usize>> = (0..n - a).map(|k| vec![k]).collect();
        classes.push((n - a..=n).collect());
        if r.classes != classes {
            fail!(
                Witness::new(format!("{}: classes {:?}", ab(s), r.classes), &[]),
                "deltas do not collapse exactly from n-a on"
            );
        }
        if !(r.closed && r.commutative) {
            fail!(
                Witness::new(
                    format!(
                        "{}: closed={}, commutative={}",
                        ab(s),
                        r.closed,
                        r.commutative
                    ),
                    &[]
                ),
                "not a commutative semigroup"
            );
        }
        if r.identity != Some(n - b) || r.absorbing != Some(n - a) {
            fail!(
                Witness::new(
                    format!(
                        "{}: identity {:?}, absorbing {:?}",
                        ab(s),
                        r.identity,
                        r.absorbing
                    ),
                    &[]
                ),
                "identity or absorbing element misplaced"
            );
        }
        for i in 0..=n - a {
            for j in 0..=n - a {
                let want = semilattice_rule(i, j, n, a, b);
                if r.table[i][j] != Some(want) {
                    fail!(
                        Witness::new(
                            format!(
                                "{}: delta_{i} after delta_{j} is {:?}, rule gives delta_{want}",
                                ab(s),
                                r.table[i][j]
                            ),
                            &[]
                        ),
                        "composition table differs from the rule"
                    );
                }
            }
        }
        if !r.non_idempotent.is_empty() {
            non_idempotent += 1;
            if first_square.is_none() {
                let l = r.non_idempotent[0];
                first_square = Some(Witness::new(
                    format!(
                        "{}: delta_{l} squared is delta_{}",
                        ab(s),
                        r.table[l][l].unwrap()
                    ),
                    &[],
                ));
            }
        }
    }
    let finding = if non_idempotent == 0 {
        "composition is idempotent for every string at this size".to_string()
    } else {
        format!(
            "composition is not idempotent for {non_idempotent} of {} strings: delta_l squared is delta_0 for 1 <= l <= n-b-1",
            strings.len()
        )
    };
    Ok(Outcome::pass(format!(
        "{} strings: n-a+1 distinct deltas, closed, commutative, identity n-b, absorbing n-a, table matches",
        strings.len()
    ))
    .note("idempotency", finding, first_square))
}

fn check_delta_closures(ctx: &Ctx) -> Result<Outcome> {
    let strings = ctx.strings2()?;
    let mut literal_failures = 0;
    let mut first: Option<Witness> = None;
    for s in &strings {
        let (n, a, b) = (ctx.n, s.a(), s.b());
        let maps = deltas(s)?;
        let co = s.constants_ideal().carrier;
        for (l, d) in maps.iter().enumerate().take(n - a + 1) {
            if let Some(x) = co.iter().find(|x| !co.contains(d.apply(x).unwrap())) {
                fail!(
                    Witness::new(
                        format!("{}: {} leaves {{a_0, a_n}}", ab(s), d.label()),
                        &[("x", x)]
                    ),
                    "I is not closed under delta_{l}"
                );
            }
            let c = differential_closure(s.carrier(), &co, d)?;
            let whole = l < n - b || l == n - a;
            if whole {
                if &c.carrier != s.carrier() {
                    let x = s.carrier().iter().find(|x| !c.carrier.contains(x)).unwrap();
                    fail!(
                        Witness::new(
                            format!("{}: closure under delta_{l} misses an element", ab(s)),
                            &[("x", x)]
                        ),
                        "closure is not the whole string"
                    );
                }
            } else {
                let expected: Vec<usize> = std::iter::once(0).chain(n - a..=n).collect();
                let got = c.carrier.positions_in(s.carrier())?;
                if got != expected {
                    fail!(
                        Witness::new(
                            format!("{}: closure under delta_{l} is {got:?}", ab(s)),
                            &[]
                        ),
                        "closure differs from {{a_0}} + N_b"
                    );
                }
                if c.carrier != co {
                    literal_failures += 1;
                    if first.is_none() {
                        let t = c
                            .traces
                            .iter()
                            .find(|t| t.entered_at.is_some() && !co.contains(&t.start))
                            .unwrap();
                        let mut entries = vec![("x", &t.start)];
                        entries.extend(t.orbit.iter().skip(1).map(|y| ("next", y)));
                        first = Some(Witness::new(
                            format!(
                                "{}: a_{} reaches {{a_0, a_n}} under delta_{l}",
                                ab(s),
                                s.index_of(&t.start).unwrap()
                            ),
                            &entries,
                        ));
                    }
                }
            }
        }
    }
    let detail = format!(
        "{} strings: closures under delta_0..delta_(n-b-1) and delta_(n-a) are the whole string; \
         under delta_(n-b)..delta_(n-a-1) the closure is {{a_0}} + N_b, which equals {{a_0, a_n}} only when a = 0 \
         ({literal_failures} cases differ)",
        strings.len()
    );
    Ok(match first {
        Some(w) => Outcome::fail(w, detail),
        None => Outcome::pass(detail),
    })
}

fn check_type_m_subsemiring(ctx: &Ctx) -> Result<Outcome> {
    let sets = ctx.anchor_sets()?;
    for anchors in &sets {
        let s = StringTypeM::new(ctx.chain, anchors)?;
        let name = anchor_label(anchors);
        let expected = (anchors.len() - 1) * ctx.n + 1;
        if s.len() != expected || !s.carrier().is_chain() {
            fail!(
                Witness::new(format!("{name} has {} elements", s.len()), &[]),
                "wrong size or not a chain"
            );
        }
        if let Some(w) = first_closure_failure(s.carrier()) {
            fail!(w, "{name} is not closed");
        }
    }
    let full = ctx.full();
    if let Some(w) = axioms_witness(full.carrier(), "full string") {
        fail!(w, "the full string breaks a semiring law");
    }
    Ok(Outcome::pass(format!(
        "{} anchor sets: (m-1)n+1-element chains closed under + and *; all laws checked on the full string",
        sets.len()
    )))
}

fn check_sub_strings(ctx: &Ctx) -> Result<Outcome> {
    let sets = if ctx.params.anchors.is_none() && ctx.n > 6 {
        vec![(0..ctx.n).collect()]
    } else {
        ctx.anchor_sets()?
    };
    let (mut pairs, mut outside) = (0, 0);
    let mut first = None;
    for anchors in &sets {
        let big = StringTypeM::new(ctx.chain, anchors)?;
        let name = anchor_label(anchors);
        let m = anchors.len();
        for mask in 0u32..1 << m {
            if mask.count_ones() < 2 {
                continue;
            }
            let picked: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let sub: Vec<usize> = picked.iter().map(|&i| anchors[i]).collect();
            let small = StringTypeM::new(ctx.chain, &sub)?;
            let sub_name = anchor_label(&sub);
            if let Some(w) = first_closure_failure(small.carrier()) {
                fail!(w, "{sub_name} is not closed");
            }
            let consecutive = picked.windows(2).all(|w| w[1] == w[0] + 1);
            let escaping = small.carrier().iter().find(|x| !big.carrier().contains(x));
            if consecutive == escaping.is_some() {
                fail!(
                    Witness::new(
                        format!(
                            "{sub_name} in {name}: containment is not decided by consecutiveness"
                        ),
                        &[]
                    ),
                    "containment characterisation fails"
                );
            }
            if let Some(x) = escaping {
                outside += 1;
                first.get_or_insert_with(|| {
                    Witness::new(
                        format!("{sub_name} is not contained in {name}"),
                        &[("x", x)],
                    )
                });
            }
            pairs += 1;
        }
    }
    let scope = if ctx.params.anchors.is_none() && ctx.n > 6 {
        "subsets of the full anchor set"
    } else {
        "anchor set and subset pairs"
    };
    let detail = format!(
        "{pairs} {scope}: every smaller string is a subsemiring of the endomorphism semiring; \
         it lies inside the larger string exactly when its anchors are consecutive there ({outside} pairs are not)"
    );
    Ok(match first {
        Some(w) => Outcome::fail(w, detail),
        None => Outcome::pass(detail),
    })
}

fn check_type_m_bands(ctx: &Ctx) -> Result<Outcome> {
    let sets = ctx.anchor_sets()?;
    let mut products = 0;
    for anchors in &sets {
        let s = StringTypeM::new(ctx.chain, anchors)?;
        let name = anchor_label(anchors);
        let idx: Vec<_> = s.indices().collect();
        for &x in &idx {
            for &y in &idx {
                let got = s.mul_index(x, y)?;
                let product = s.element(x).then(s.element(y));
                if s.index_of(&product) != Some(got) {
                    fail!(
                        Witness::new(
                            format!("{name}: formula gives {got} for {x}*{y}"),
                            &[
                                ("x", s.element(x)),
                                ("y", s.element(y)),
                                ("product", &product),
                                ("formula", s.element(got))
                            ],
                        ),
                        "double-index formula disagrees with composition"
                    );
                }
                products += 1;
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{products} products over {} anchor sets match composition",
        sets.len()
    )))
}

fn check_constants_ideal(ctx: &Ctx) -> Result<Outcome> {
    let sets = ctx.anchor_sets()?;
    for anchors in &sets {
        let s = StringTypeM::new(ctx.chain, anchors)?;
        let name = anchor_label(anchors);
        let co = s.constants_ideal();
        let expected: Vec<ChainEndomorphism> = anchors
            .iter()
            .map(|&c| ctx.chain.constant(c))
            .collect::<Result<_>>()?;
        if co.carrier.elements() != expected.as_slice() {
            fail!(
                Witness::new(
                    format!("{name}: constants are not the anchor constants"),
                    &[]
                ),
                "wrong constants"
            );
        }
        if let Some(w) = is_ideal(&co.carrier, s.carrier())? {
            fail!(
                Witness::new(
                    format!("{name}: {}", w.rule),
                    &[
                        ("left", &w.left),
                        ("right", &w.right),
                        ("result", &w.result)
                    ]
                ),
                "constants are not an ideal"
            );
        }
    }
    Ok(Outcome::pass(format!(
        "{} anchor sets: constants form a two-sided ideal",
        sets.len()
    )))
}

fn full_string_only(ctx: &Ctx) -> Result<()> {
    if ctx.params.a.is_some() || ctx.params.b.is_some() || ctx.params.anchors.is_some() {
        return Err(Error::BadParams(
            "this claim works on the full string; give only n (and s where it applies)".into(),
        ));
    }
    Ok(())
}

/// The general construction: a gap of at least two between
/// consecutive anchors breaks the Leibniz rule for `δ_{α_{p,ℓ}}` at
/// `(α_{p+1,ℓ}, α_{p,r})` with `p = n - a_{ℓ+1}`.
fn gap_construction(ctx: &Ctx) -> Result<(usize, usize, Option<Witness>)> {
    let (mut built, mut broken) = (0, 0);
    let mut first = None;
    for anchors in ctx.anchor_sets()? {
        let s = StringTypeM::new(ctx.chain, &anchors)?;
        let name = anchor_label(&anchors);
        let m = anchors.len();
        for l in 1..m.saturating_sub(1) {
            if s.anchor(l + 1) - s.anchor(l) < 2 {
                continue;
            }
            let p = ctx.n - s.anchor(l + 1);
            let alpha = s.element_at(p, l)?;
            let x = s.element_at(p + 1, l)?;
            for r in l + 1..m {
                let y = s.element_at(p, r)?;
                let lhs = delta_value(alpha, &x.then(y));
                let rhs = delta_value(alpha, x)
                    .then(y)
                    .join(&x.then(&delta_value(alpha, y)));
                built += 1;
                if lhs != rhs && &lhs == y && rhs == *s.element_at(p + 1, r)? {
                    broken += 1;
                    first.get_or_insert_with(|| {
                        Witness::new(
                            format!("{name}, l={l}, p={p}, r={r}"),
                            &[
                                ("delta of", alpha),
                                ("x", x),
                                ("y", y),
                                ("lhs", &lhs),
                                ("rhs", &rhs),
                            ],
                        )
                    });
                }
            }
        }
    }
    Ok((built, broken, first))
}

fn check_type_m_delta_fails(ctx: &Ctx) -> Result<Outcome> {
    full_string_only(ctx)?;
    let (built, broken, first) = gap_construction(ctx)?;
    let general =
        format!("{broken} of {built} gap constructions break the Leibniz rule as predicted");
    if ctx.n != 4 {
        let out = Outcome::info(format!("the reference example lives on C_4; {general}"));
        return Ok(match first {
            Some(w) => out.with_witness(w),
            None => out,
        });
    }
    let c = ctx.chain;
    let alpha = c.endomorphism(&[2, 2, 2, 2])?;
    let x = c.endomorphism(&[0, 0, 1, 1])?;
    let y = c.endomorphism(&[2, 2, 3, 3])?;
    let full = ctx.full();
    let d = delta(&alpha, full.carrier())?;
    let xy = x.then(&y);
    let dx = d.apply(&x).unwrap();
    let dx_y = dx.then(&y);
    let w = leibniz_at(&d, &x, &y)?;
    let kappa3 = c.constant(3)?;
    let reproduced = xy == alpha
        && dx == &alpha
        && dx_y == kappa3
        && w.as_ref()
            .is_some_and(|w| w.lhs == alpha && w.rhs == kappa3);
    let witness = Witness::new(
        "delta(x*y) != delta(x)*y + x*delta(y)",
        &[
            ("delta of", &alpha),
            ("x", &x),
            ("y", &y),
            ("x*y", &xy),
            ("delta(x)", dx),
            ("delta(x)*y", &dx_y),
            ("lhs", &d.apply(&xy).unwrap().clone()),
            (
                "rhs",
                &w.as_ref()
                    .map(|w| w.rhs.clone())
                    .unwrap_or_else(|| alpha.clone()),
            ),
        ],
    );
    let mut out = if reproduced {
        Outcome::pass(format!(
            "x*y = <2,2,2,2>, lhs <2,2,2,2>, rhs <3,3,3,3>; {general}"
        ))
        .with_witness(witness)
    } else {
        Outcome::fail(witness, "the reference counterexample does not reproduce")
    };
    if let Some(f) = satisfies_leibniz(&d)? {
        out = out.note(
            "first witness",
            "first failing pair in carrier order",
            Some(Witness::leibniz("canonical witness", &f)),
        );
    }
    Ok(out)
}

fn check_constants_delta(ctx: &Ctx) -> Result<Outcome> {
    full_string_only(ctx)?;
    let full = ctx.full();
    for alpha in full.carrier() {
        let r = delta_on_constants(alpha, &full)?;
        if let Some(row) = r.rows.iter().find(|row| !row.matches) {
            fail!(
                Witness::new(
                    format!(
                        "delta of a_{}_{} on kappa_{}: closed form gives kappa_{}",
                        r.s,
                        r.l,
                        row.j - 1,
                        row.predicted
                    ),
                    &[
                        ("delta of", alpha),
                        ("constant", &row.constant),
                        ("image", &row.image)
                    ],
                ),
                "three-case rule disagrees"
            );
        }
        if let Some(w) = &r.leibniz {
            fail!(
                Witness::leibniz(format!("delta of {alpha} on the constants"), w),
                "Leibniz rule fails on the constants"
            );
        }
    }
    Ok(Outcome::pass(format!(
        "{} delta maps: three-case rule exact on all {} constants, Leibniz rule holds there",
        full.len(),
        ctx.n
    )))
}

fn mixed_set(ctx: &Ctx) -> Result<Carrier> {
    let full = ctx.full();
    let top = StringType2::new(ctx.chain, ctx.n - 2, ctx.n - 1)?;
    full.constants_ideal().carrier.union(top.carrier())
}

fn check_mixed_set(ctx: &Ctx) -> Result<Outcome> {
    full_string_only(ctx)?;
    let n = ctx.n;
    let full = ctx.full();
    let s = mixed_set(ctx)?;
    if !s.is_subset_of(full.carrier()) {
        fail!(
            Witness::new("S is not inside the full string", &[]),
            "not a subset"
        );
    }
    if let Some(w) = axioms_witness(&s, "S") {
        fail!(w, "S is not a subsemiring");
    }
    for alpha in full.carrier() {
        if let Err(Error::EscapesAmbient { .. }) = delta_into(alpha, &s, &s) {
            let x = s
                .iter()
                .find(|x| !s.contains(&delta_value(alpha, x)))
                .unwrap();
            fail!(
                Witness::new(
                    "delta leaves S",
                    &[
                        ("delta of", alpha),
                        ("x", x),
                        ("image", &delta_value(alpha, x))
                    ]
                ),
                "S is not invariant"
            );
        }
    }
    let (mut checked, mut literal_mismatch) = (0, 0);
    for l in 1..n.saturating_sub(1) {
        for k in 0..=n {
            let alpha = full.element_at(k, l)?;
            for t in 0..n {
                let got = delta_value(alpha, full.element_at(t, n - 1)?);
                let kappa = |i| ctx.chain.constant(i);
                let want = if t + l < n {
                    kappa(n - 2)?
                } else if t + l == n {
                    full.element_at(k, n - 1)?.clone()
                } else {
                    kappa(n - 1)?
                };
                if got != want {
                    fail!(
                        Witness::new(
                            format!("delta of a_{k}_{l} on a_{t}_{}", n - 1),
                            &[("got", &got), ("expected", &want)]
                        ),
                        "image formula disagrees"
                    );
                }
                let literal = if t + l + 2 <= n {
                    kappa(n - 2)?
                } else if t + l + 1 == n {
                    full.element_at(k, n - 1)?.clone()
                } else {
                    kappa(n - 1)?
                };
                if literal != got {
                    literal_mismatch += 1;
                }
                checked += 1;
            }
        }
    }
    Ok(Outcome::pass(format!(
        "S ({} elements) is a subsemiring invariant under all {} delta maps; image formula on the top piece exact at {checked} points \
         with thresholds s <= n-l-1 / s = n-l / s >= n-l+1",
        s.len(),
        full.len()
    ))
    .note(
        "image thresholds",
        format!("the thresholds shifted down by one (s <= n-l-2 / s = n-l-1 / s >= n-l) disagree at {literal_mismatch} of {checked} points"),
        None,
    ))
}

fn check_mixed_set_delta_fails(ctx: &Ctx) -> Result<Outcome> {
    full_string_only(ctx)?;
    let full = ctx.full();
    let s = mixed_set(ctx)?;
    let mut derivations = 0;
    let mut first = None;
    for alpha in full.carrier() {
        match satisfies_leibniz(&delta_into(alpha, &s, &s)?)? {
            None => derivations += 1,
            Some(w) => {
                first.get_or_insert_with(|| Witness::leibniz(format!("delta of {alpha} on S"), &w));
            }
        }
    }
    let general = format!(
        "{derivations} of {} delta maps satisfy the Leibniz rule on S",
        full.len()
    );
    if ctx.n != 4 {
        let out = Outcome::info(format!("the reference example lives on C_4; {general}"));
        return Ok(match first {
            Some(w) => out.with_witness(w),
            None => out,
        });
    }
    let c = ctx.chain;
    let alpha = c.endomorphism(&[1, 2, 2, 2])?;
    let k1 = c.constant(1)?;
    let y = c.endomorphism(&[2, 2, 3, 3])?;
    let d = delta_into(&alpha, &s, &s)?;
    let xy = k1.then(&y);
    let lhs = d.apply(&xy).unwrap().clone();
    let dx = d.apply(&k1).unwrap().clone();
    let dx_y = dx.then(&y);
    let dy = d.apply(&y).unwrap().clone();
    let x_dy = k1.then(&dy);
    let rhs = dx_y.join(&x_dy);
    let (k2, k3) = (c.constant(2)?, c.constant(3)?);
    let reproduced = xy == k2 && lhs == k2 && dx == k2 && dx_y == k3 && rhs == k3;
    let witness = Witness::new(
        "delta(x*y) != delta(x)*y + x*delta(y)",
        &[
            ("delta of", &alpha),
            ("x", &k1),
            ("y", &y),
            ("x*y", &xy),
            ("lhs", &lhs),
            ("delta(x)", &dx),
            ("delta(x)*y", &dx_y),
            ("delta(y)", &dy),
            ("x*delta(y)", &x_dy),
            ("rhs", &rhs),
        ],
    );
    let mut out = if reproduced {
        Outcome::pass(format!(
            "kappa_1*y = kappa_2, lhs kappa_2, delta(kappa_1)*y = kappa_3, rhs kappa_3; {general}"
        ))
        .with_witness(witness)
    } else {
        Outcome::fail(witness, "the reference counterexample does not reproduce")
    };
    if let Some(f) = satisfies_leibniz(&d)? {
        out = out.note(
            "first witness",
            "first failing pair in carrier order",
            Some(Witness::leibniz("canonical witness", &f)),
        );
    }
    Ok(out)
}

fn check_top_delta_values(ctx: &Ctx) -> Result<Outcome> {
    full_string_only(ctx)?;
    let n = ctx.n;
    let full = ctx.full();
    let kappa = |i| ctx.chain.constant(i);
    let mut checked = 0;
    for l in 1..n.saturating_sub(1) {
        for k in 0..=n {
            for s in 0..=n {
                let alpha = full.element_at(s, n - 1)?;
                let x = full.element_at(k, l)?;
                let got = delta_value(alpha, x);
                let want = if s + l < n {
                    kappa(n - 2)?
                } else if s + l == n {
                    full.element_at(k, n - 1)?.clone()
                } else {
                    kappa(n - 1)?
                };
                if got != want {
                    fail!(
                        Witness::new(
                            format!("delta of a_{s}_{} on a_{k}_{l}", n - 1),
                            &[("got", &got), ("expected", &want)]
                        ),
                        "closed form disagrees"
                    );
                }
                checked += 1;
            }
        }
    }
    let detail = if checked == 0 {
        "no lower pieces at this size; holds vacuously".to_string()
    } else {
        format!("closed form exact at all {checked} index triples")
    };
    Ok(Outcome::pass(detail))
}

fn check_top_delta_absorption(ctx: &Ctx) -> Result<Outcome> {
    full_string_only(ctx)?;
    let n = ctx.n;
    let full = ctx.full();
    let kappa = |i| ctx.chain.constant(i);
    let mut top_checked = 0;
    for k in 0..=n {
        for s in 0..=n {
            let got = delta_value(full.element_at(s, n - 1)?, full.element_at(k, n - 1)?);
            let want = if k + s <= 1 {
                kappa(n - 2)?
            } else if k == 1 && s == 1 {
                full.element_at(1, n - 1)?.clone()
            } else {
                kappa(n - 1)?
            };
            if n >= 3 && got != want {
                fail!(
                    Witness::new(
                        format!("delta of a_{s}_{} on a_{k}_{}", n - 1, n - 1),
                        &[("got", &got), ("expected", &want)]
                    ),
                    "top-piece values disagree"
                );
            }
            top_checked += 1;
        }
    }
    let mut checked = 0;
    for s in 0..=n {
        let alpha = full.element_at(s, n - 1)?;
        for l in 1..n {
            for k in 0..=n {
                let x = full.element_at(k, l)?;
                let dx = delta_value(alpha, x);
                for q in 1..n.saturating_sub(1) {
                    for p in 0..=n {
                        let y = full.element_at(p, q)?;
                        let left = dx.then(y);
                        let right = x.then(&delta_value(alpha, y));
                        if left.join(&right) != right {
                            fail!(
                                Witness::new(
                                    format!("s={s}: d(x)y is not below x d(y)"),
                                    &[
                                        ("delta of", alpha),
                                        ("x", x),
                                        ("y", y),
                                        ("d(x)y", &left),
                                        ("x d(y)", &right)
                                    ],
                                ),
                                "absorption fails"
                            );
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    let detail = if checked == 0 {
        "no lower pieces at this size; holds vacuously".to_string()
    } else {
        format!("d(x)y + x d(y) = x d(y) at all {checked} index tuples; top-piece values exact at {top_checked} pairs")
    };
    Ok(Outcome::pass(detail))
}

fn check_top_delta_derivation(ctx: &Ctx) -> Result<Outcome> {
    if ctx.params.a.is_some() || ctx.params.b.is_some() || ctx.params.anchors.is_some() {
        return full_string_only(ctx).map(|_| unreachable!());
    }
    let n = ctx.n;
    let full = ctx.full();
    let ss = ctx.top_s(2)?;
    for &s in &ss {
        let d = delta(full.element_at(s, n - 1)?, full.carrier())?
            .with_label(format!("delta_a_{s}_{}", n - 1));
        if let Some(f) = is_derivation(&d)? {
            fail!(
                Witness::failure(d.label().to_string(), &f),
                "{} is not a derivation",
                d.label()
            );
        }
        for order in 2..=3 {
            if let Some(w) = iterated_leibniz_check(&d, order)? {
                fail!(
                    Witness::new(
                        format!("{}: order {order}", d.label()),
                        &[("x", &w.x), ("y", &w.y), ("lhs", &w.lhs), ("rhs", &w.rhs)]
                    ),
                    "iterated Leibniz rule fails"
                );
            }
        }
    }
    let mut out = Outcome::pass(format!(
        "s in {:?}: derivations of the {}-element full string; iterated rule holds to order 3",
        ss,
        full.len()
    ));
    for s in 0..2 {
        let d = delta(full.element_at(s, n - 1)?, full.carrier())?;
        let (finding, w) = match is_derivation(&d)? {
            None => (format!("s={s}: also a derivation"), None),
            Some(f) => (
                format!("s={s}: not a derivation"),
                Some(Witness::failure(format!("s={s}"), &f)),
            ),
        };
        out = out.note("small s", finding, w);
    }
    Ok(out)
}

fn check_top_delta_closure(ctx: &Ctx) -> Result<Outcome> {
    if ctx.params.a.is_some() || ctx.params.b.is_some() || ctx.params.anchors.is_some() {
        return full_string_only(ctx).map(|_| unreachable!());
    }
    let n = ctx.n;
    let full = ctx.full();
    let co = full.constants_ideal().carrier;
    let ss = ctx.top_s(2)?;
    for &s in &ss {
        let d = delta(full.element_at(s, n - 1)?, full.carrier())?;
        if let Some(x) = co.iter().find(|x| !co.contains(d.apply(x).unwrap())) {
            fail!(
                Witness::new(format!("s={s}: the map leaves the constants"), &[("x", x)]),
                "constants are not closed under the map"
            );
        }
        let c = differential_closure(full.carrier(), &co, &d)?;
        if &c.carrier != full.carrier() {
            let x = full
                .carrier()
                .iter()
                .find(|x| !c.carrier.contains(x))
                .unwrap();
            fail!(
                Witness::new(format!("s={s}: closure misses an element"), &[("x", x)]),
                "closure is not the full string"
            );
        }
        if let Some(w) = closure_is_differential(&c, &d) {
            fail!(w, "closure is not a differential subsemiring");
        }
    }
    Ok(Outcome::pass(format!(
        "s in {ss:?}: the constants' closure is the full string"
    )))
}

/// Runs one claim at one parameter point.
pub fn verify_claim(id: ClaimId, params: &Params) -> Result<VerificationResult> {
    let n = params.n;
    if n < 2 {
        return Err(Error::BadParams(format!("n must be at least 2, got {n}")));
    }
    let chain = Chain::new(n).map_err(|e| Error::BadParams(e.to_string()))?;
    let ctx = Ctx { n, chain, params };
    let start = Instant::now();
    let outcome = match id {
        ClaimId::StringSubsemiring => check_string_subsemiring(&ctx),
        ClaimId::ProductBands => check_product_bands(&ctx),
        ClaimId::SquaringClasses => check_squaring_classes(&ctx),
        ClaimId::LowerHalf => check_half(
            &ctx,
            SubfamilyKind::S,
            [SubfamilyKind::ANilpotents, SubfamilyKind::Idempotents],
        ),
        ClaimId::UpperHalf => check_half(
            &ctx,
            SubfamilyKind::T,
            [SubfamilyKind::Idempotents, SubfamilyKind::BNilpotents],
        ),
        ClaimId::ShiftDomain => check_shift_domain(&ctx),
        ClaimId::ShiftDerivation => check_shift_derivation(&ctx),
        ClaimId::ShiftMaximal => check_shift_maximal(&ctx),
        ClaimId::DifferentialIdeals => check_differential_ideals(&ctx),
        ClaimId::ClosureSubsemiring => check_closure_subsemiring(&ctx),
        ClaimId::ShiftClosure => check_shift_closure(&ctx),
        ClaimId::DeltaDerivation => check_delta_derivation(&ctx),
        ClaimId::DeltaCommute => check_delta_commute(&ctx),
        ClaimId::ZeroAnchorFamily => check_zero_anchor_family(&ctx),
        ClaimId::TopAnchorsTable => check_top_anchors_table(&ctx),
        ClaimId::DeltaSemilattice => check_delta_semilattice(&ctx),
        ClaimId::DeltaClosures => check_delta_closures(&ctx),
        ClaimId::TypeMSubsemiring => check_type_m_subsemiring(&ctx),
        ClaimId::SubStrings => check_sub_strings(&ctx),
        ClaimId::TypeMProductBands => check_type_m_bands(&ctx),
        ClaimId::ConstantsIdeal => check_constants_ideal(&ctx),
        ClaimId::TypeMDeltaFails => check_type_m_delta_fails(&ctx),
        ClaimId::ConstantsDelta => check_constants_delta(&ctx),
        ClaimId::MixedSet => check_mixed_set(&ctx),
        ClaimId::MixedSetDeltaFails => check_mixed_set_delta_fails(&ctx),
        ClaimId::TopDeltaValues => check_top_delta_values(&ctx),
        ClaimId::TopDeltaAbsorption => check_top_delta_absorption(&ctx),
        ClaimId::TopDeltaDerivation => check_top_delta_derivation(&ctx),
        ClaimId::TopDeltaClosure => check_top_delta_closure(&ctx),
    }?;
    Ok(VerificationResult {
        claim: id,
        params: params.clone(),
        status: outcome.status,
        witness: outcome.witness,
        detail: outcome.detail,
        notes: outcome.notes,
        elapsed: start.elapsed(),
    })
}

/// Runs each claim at each `n` in range, in parallel, and returns the results
/// ordered by claim and then by `n`.
pub fn run_suite(
    claims: &[ClaimId],
    n_range: RangeInclusive<usize>,
) -> Result<Vec<VerificationResult>> {
    if n_range.is_empty() {
        return Ok(Vec::new());
    }
    if *n_range.start() < 2 {
        return Err(Error::BadParams("n must be at least 2".into()));
    }
    let mut ids = claims.to_vec();
    ids.sort();
    ids.dedup();
    let jobs: Vec<(ClaimId, usize)> = ids
        .iter()
        .flat_map(|&id| n_range.clone().map(move |n| (id, n)))
        .collect();
    jobs.into_par_iter()
        .map(|(id, n)| verify_claim(id, &Params::n(n)))
        .collect()
}

/// True when no result failed.
pub fn all_pass(results: &[VerificationResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

/// A carrier named by a short spec, see [`CarrierSpec::parse`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarrierSpec {
    /// `STR{a,b}`, or a string of type m when more anchors are given.
    Anchors(Vec<Token>),
    /// `DS` of a two-anchor string.
    ShiftDomain(Token, Token),
    /// The full string over every point.
    Full,
    /// The constants together with `STR{n-2,n-1}`.
    Mixed,
}

/// A self-map named by a short spec, see [`MapSpec::parse`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapSpec {
    Shift,
    /// `δ_{α_k}` in a two-anchor string.
    Delta(Token),
    /// `δ_{α_{k,ℓ}}` in a string of type m (or the full string).
    DeltaM(Token, Token),
}

/// A number, or an offset from `n` written `n`, `n-1`, `n-2`, ….
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Value(usize),
    FromTop(usize),
}

impl Token {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::SpecResolution(s.to_string());
        if let Some(rest) = s.strip_prefix('n') {
            let rest = rest.trim();
            if rest.is_empty() {
                return Ok(Token::FromTop(0));
            }
            let off = rest.strip_prefix('-').ok_or_else(bad)?.trim();
            return off.parse().map(Token::FromTop).map_err(|_| bad());
        }
        s.parse().map(Token::Value).map_err(|_| bad())
    }

    pub fn resolve(self, n: usize) -> Result<usize> {
        match self {
            Token::Value(v) => Ok(v),
            Token::FromTop(off) => n
                .checked_sub(off)
                .ok_or_else(|| Error::SpecResolution(format!("n-{off} is negative for n={n}"))),
        }
    }
}

fn tokens(s: &str) -> Result<Vec<Token>> {
    s.split(',').map(Token::parse).collect()
}

impl CarrierSpec {
    /// `"a,b"`, `"a1,...,am"`, `"DS:a,b"`, `"full"` or `"S"`; any number may be
    /// written as `n`, `n-1`, ….
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "full" => Ok(CarrierSpec::Full),
            "S" => Ok(CarrierSpec::Mixed),
            _ => {
                if let Some(rest) = s.strip_prefix("DS:") {
                    match tokens(rest)?.as_slice() {
                        [a, b] => Ok(CarrierSpec::ShiftDomain(*a, *b)),
                        _ => Err(Error::SpecResolution(s.to_string())),
                    }
                } else {
                    let t = tokens(s)?;
                    if t.len() < 2 {
                        return Err(Error::SpecResolution(s.to_string()));
                    }
                    Ok(CarrierSpec::Anchors(t))
                }
            }
        }
    }
}

impl MapSpec {
    /// `"D"`, `"delta:k"` or `"delta:k,l"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "D" {
            return Ok(MapSpec::Shift);
        }
        let rest = s
            .strip_prefix("delta:")
            .ok_or_else(|| Error::SpecResolution(s.to_string()))?;
        match tokens(rest)?.as_slice() {
            [k] => Ok(MapSpec::Delta(*k)),
            [k, l] => Ok(MapSpec::DeltaM(*k, *l)),
            _ => Err(Error::SpecResolution(s.to_string())),
        }
    }
}

/// A carrier together with the string its maps are defined on.
pub struct Resolved {
    pub carrier: Carrier,
    pub two: Option<StringType2>,
    pub many: Option<StringTypeM>,
}

impl CarrierSpec {
    pub fn resolve(&self, n: usize) -> Result<Resolved> {
        let chain = Chain::new(n).map_err(|e| Error::SpecResolution(e.to_string()))?;
        let spec_err = |e: Error| Error::SpecResolution(e.to_string());
        Ok(match self {
            CarrierSpec::Anchors(t) => {
                let anchors = t.iter().map(|x| x.resolve(n)).collect::<Result<Vec<_>>>()?;
                let many = StringTypeM::new(chain, &anchors).map_err(spec_err)?;
                let two = if anchors.len() == 2 {
                    Some(StringType2::new(chain, anchors[0], anchors[1]).map_err(spec_err)?)
                } else {
                    None
                };
                Resolved {
                    carrier: many.carrier().clone(),
                    two,
                    many: Some(many),
                }
            }
            CarrierSpec::ShiftDomain(a, b) => {
                let two =
                    StringType2::new(chain, a.resolve(n)?, b.resolve(n)?).map_err(spec_err)?;
                Resolved {
                    carrier: two.subfamily(SubfamilyKind::DS)?.carrier,
                    many: Some(two.to_type_m()),
                    two: Some(two),
                }
            }
            CarrierSpec::Full => {
                let many = StringTypeM::full(chain).map_err(spec_err)?;
                Resolved {
                    carrier: many.carrier().clone(),
                    two: None,
                    many: Some(many),
                }
            }
            CarrierSpec::Mixed => {
                if n < 2 {
                    return Err(Error::SpecResolution("S needs n >= 2".into()));
                }
                let many = StringTypeM::full(chain).map_err(spec_err)?;
                let top = StringType2::new(chain, n - 2, n - 1).map_err(spec_err)?;
                Resolved {
                    carrier: many.constants_ideal().carrier.union(top.carrier())?,
                    two: None,
                    many: Some(many),
                }
            }
        })
    }
}

impl MapSpec {
    /// Builds the map on `r.carrier`, taking values in the full endomorphism
    /// semiring and recording them against the carrier itself.
    pub fn resolve(&self, n: usize, r: &Resolved) -> Result<SelfMap> {
        let missing =
            |what: &str| Error::SpecResolution(format!("{what} needs a two-anchor string"));
        match self {
            MapSpec::Shift => {
                let two = r.two.as_ref().ok_or_else(|| missing("D"))?;
                shift_derivation(two).restrict(&r.carrier)
            }
            MapSpec::Delta(k) => {
                let two = r.two.as_ref().ok_or_else(|| missing("delta:k"))?;
                let alpha = two
                    .element(k.resolve(n)?)
                    .map_err(|e| Error::SpecResolution(e.to_string()))?;
                Ok(delta_into(
                    alpha,
                    &r.carrier,
                    &r.carrier.union(&image_set(alpha, &r.carrier))?,
                )?
                .with_label(format!("delta_a_{}", k.resolve(n)?)))
            }
            MapSpec::DeltaM(k, l) => {
                let full;
                let many = match &r.many {
                    Some(m) => m,
                    None => {
                        full = StringTypeM::full(Chain::new(n)?)?;
                        &full
                    }
                };
                let (k, l) = (k.resolve(n)?, l.resolve(n)?);
                let alpha = many
                    .element_at(k, l)
                    .map_err(|e| Error::SpecResolution(e.to_string()))?;
                Ok(delta_into(
                    alpha,
                    &r.carrier,
                    &r.carrier.union(&image_set(alpha, &r.carrier))?,
                )?
                .with_label(format!("delta_a_{k}_{l}")))
            }
        }
    }
}

fn image_set(alpha: &ChainEndomorphism, c: &Carrier) -> Carrier {
    Carrier::new(c.chain(), c.iter().map(|x| delta_value(alpha, x))).expect("same chain")
}

/// First additivity or Leibniz failure of a named map on a named carrier.
pub fn search_counterexample(
    n: usize,
    map: &str,
    carrier: &str,
) -> Result<Option<DerivationFailure>> {
    let r = CarrierSpec::parse(carrier)?.resolve(n)?;
    let m = MapSpec::parse(map)?.resolve(n, &r)?;
    match is_derivation(&m) {
        Err(Error::DomainNotClosed { .. }) => Err(Error::SpecResolution(format!(
            "{carrier} is not closed under the semiring operations"
        ))),
        other => other,
    }
}
