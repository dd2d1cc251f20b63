//! Strings: chains of endomorphisms whose images lie in a fixed set of anchors.
//!
//! For anchors `a < b` the string `STR{a,b}` holds the `n + 1` maps
//! `α_0 < α_1 < … < α_n`, where `α_k` sends the top `k` points of the chain to
//! `b` and the rest to `a`. Gluing consecutive two-anchor strings over
//! `a_1 < … < a_m` gives a string of type `m`, a chain of `(m - 1)·n + 1`
//! maps indexed by pairs `(k, ℓ)`.
//!
//! Carrier order and index order agree: lexicographic order on image tuples
//! is the same as the pointwise order along a chain, so `α_k` sits at
//! position `k` of its carrier.

use std::fmt;

use serde::Serialize;

use crate::chain::{Carrier, Chain, ChainEndomorphism};
use crate::error::{Error, Result};

/// `α_k` for anchors `lo < hi`: the first `n - k` points go to `lo`, the last
/// `k` points to `hi`.
fn two_valued(n: usize, lo: u8, hi: u8, k: usize) -> ChainEndomorphism {
    debug_assert!(k <= n);
    let mut images = vec![lo; n - k];
    images.resize(n, hi);
    ChainEndomorphism::from_raw(images)
}

/// Clamp an index band `lo..=hi` given with signed bounds to `0..=n`.
fn band(lo: isize, hi: isize, n: usize) -> Vec<usize> {
    let lo = lo.max(0);
    let hi = hi.min(n as isize);
    if lo > hi {
        Vec::new()
    } else {
        (lo as usize..=hi as usize).collect()
    }
}

/// Behaviour of `α_k` under squaring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    /// `α_k² = α_0`.
    ANilpotent,
    /// `α_k² = α_k`.
    Idempotent,
    /// `α_k² = α_n`.
    BNilpotent,
}

/// Named subsets of a string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubfamilyKind {
    /// `N_a = {α_0, …, α_{n-b-1}}`.
    ANilpotents,
    /// `N_b = {α_{n-a}, …, α_n}`.
    BNilpotents,
    /// `Id_{a,b} = {α_{n-b}, …, α_{n-a-1}}`.
    Idempotents,
    /// `S_{a,b} = {α_0, …, α_{n-a-1}} = N_a ⊔ Id_{a,b}`.
    S,
    /// `T_{a,b} = {α_{n-b}, …, α_n} = Id_{a,b} ⊔ N_b`.
    T,
    /// `DS_{a,b} = {α_0, …, α_{n-b}}`, the domain of the shift derivation.
    DS,
    /// `I_j = {α_0, …, α_j}` for `j ≤ n - b - 1`.
    DifferentialIdeal(usize),
    /// The constant maps of the string.
    Constants,
}

impl fmt::Display for SubfamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubfamilyKind::ANilpotents => f.write_str("N_a"),
            SubfamilyKind::BNilpotents => f.write_str("N_b"),
            SubfamilyKind::Idempotents => f.write_str("Id"),
            SubfamilyKind::S => f.write_str("S"),
            SubfamilyKind::T => f.write_str("T"),
            SubfamilyKind::DS => f.write_str("DS"),
            SubfamilyKind::DifferentialIdeal(j) => write!(f, "I_{j}"),
            SubfamilyKind::Constants => f.write_str("CO"),
        }
    }
}

/// A named subset of a string together with the positions of its members in
/// the string's carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subfamily {
    pub kind: SubfamilyKind,
    pub positions: Vec<usize>,
    pub carrier: Carrier,
}

/// `STR{a,b}`, the string of type 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringType2 {
    chain: Chain,
    a: usize,
    b: usize,
    carrier: Carrier,
}

impl StringType2 {
    pub fn new(chain: Chain, a: usize, b: usize) -> Result<Self> {
        let n = chain.len();
        if a >= b || b >= n {
            return Err(Error::BadAnchors {
                anchors: vec![a, b],
                n,
                reason: "need 0 <= a < b <= n-1",
            });
        }
        let elements = (0..=n)
            .map(|k| two_valued(n, a as u8, b as u8, k))
            .collect();
        Ok(StringType2 {
            chain,
            a,
            b,
            carrier: Carrier::from_sorted(chain, elements),
        })
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn n(&self) -> usize {
        self.chain.len()
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k > self.n() {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: self.n(),
            });
        }
        Ok(())
    }

    /// `α_k`.
    pub fn element(&self, k: usize) -> Result<&ChainEndomorphism> {
        self.check_index(k)?;
        Ok(&self.carrier.elements()[k])
    }

    /// The `k` with `α_k = f`, if `f` belongs to the string.
    pub fn index_of(&self, f: &ChainEndomorphism) -> Option<usize> {
        self.carrier.index_of(f)
    }

    /// Index of `α_k · α_s` from the three product bands, without composing:
    ///
    /// | `s`                           | product |
    /// |-------------------------------|---------|
    /// | `0 ..= n-b-1`                 | `α_0`   |
    /// | `n-b ..= n-a-1`               | `α_k`   |
    /// | `n-a ..= n`                   | `α_n`   |
    pub fn mul_index(&self, k: usize, s: usize) -> Result<usize> {
        self.check_index(k)?;
        self.check_index(s)?;
        let n = self.n();
        Ok(if s + self.b < n {
            0
        } else if s + self.a < n {
            k
        } else {
            n
        })
    }

    /// Squaring class of `α_k`, read off the index bands.
    pub fn classify(&self, k: usize) -> Result<Classification> {
        self.check_index(k)?;
        let n = self.n();
        Ok(if k + self.b < n {
            Classification::ANilpotent
        } else if k + self.a < n {
            Classification::Idempotent
        } else {
            Classification::BNilpotent
        })
    }

    /// Index range defining a subfamily.
    pub fn subfamily_range(&self, kind: SubfamilyKind) -> Result<Vec<usize>> {
        let (n, a, b) = (self.n() as isize, self.a as isize, self.b as isize);
        let nn = self.n();
        Ok(match kind {
            SubfamilyKind::ANilpotents => band(0, n - b - 1, nn),
            SubfamilyKind::BNilpotents => band(n - a, n, nn),
            SubfamilyKind::Idempotents => band(n - b, n - a - 1, nn),
            SubfamilyKind::S => band(0, n - a - 1, nn),
            SubfamilyKind::T => band(n - b, n, nn),
            SubfamilyKind::DS => band(0, n - b, nn),
            SubfamilyKind::DifferentialIdeal(j) => {
                let max = self.n() - self.b - 1;
                if j > max {
                    return Err(Error::IndexOutOfRange { index: j, max });
                }
                band(0, j as isize, nn)
            }
            SubfamilyKind::Constants => vec![0, nn],
        })
    }

    pub fn subfamily(&self, kind: SubfamilyKind) -> Result<Subfamily> {
        let positions = self.subfamily_range(kind)?;
        Ok(self.subfamily_at(kind, positions))
    }

    fn subfamily_at(&self, kind: SubfamilyKind, positions: Vec<usize>) -> Subfamily {
        let elements = positions
            .iter()
            .map(|&k| self.carrier.elements()[k].clone())
            .collect();
        Subfamily {
            kind,
            positions,
            carrier: Carrier::from_sorted(self.chain, elements),
        }
    }

    /// `{α_0, α_n}`, the two constants of the string.
    pub fn constants_ideal(&self) -> Subfamily {
        self.subfamily_at(SubfamilyKind::Constants, vec![0, self.n()])
    }

    /// The same string viewed as a string of type 2 over two anchors.
    pub fn to_type_m(&self) -> StringTypeM {
        StringTypeM::new(self.chain, &[self.a, self.b]).expect("anchors already validated")
    }

    /// Human label of `α_k`.
    pub fn label(&self, k: usize) -> String {
        format!("a_{k}")
    }
}

/// A canonical index `(k, ℓ)` into a string of type `m`.
///
/// Adjacent two-anchor pieces share their boundary constant:
/// `α_{0,ℓ+1} = α_{n,ℓ}`. The canonical form always writes such an element as
/// `(n, ℓ)`; only the global least element keeps `k = 0`, as `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StringIndexM {
    k: usize,
    l: usize,
}

impl StringIndexM {
    /// Canonicalizes `(k, ℓ)` for a string over `m` anchors of `C_n`.
    /// `ℓ` ranges over `1..=m-1`; `(0, m)` is accepted as an alias of `(n, m-1)`.
    pub fn new(k: usize, l: usize, n: usize, m: usize) -> Result<Self> {
        if k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let max_l = if k == 0 { m } else { m - 1 };
        if l == 0 || l > max_l {
            return Err(Error::IndexOutOfRange {
                index: l,
                max: max_l,
            });
        }
        Ok(if k == 0 && l > 1 {
            StringIndexM { k: n, l: l - 1 }
        } else {
            StringIndexM { k, l }
        })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn l(self) -> usize {
        self.l
    }

    /// Position in the string's carrier.
    pub fn position(self, n: usize) -> usize {
        if self.k == 0 {
            0
        } else {
            (self.l - 1) * n + self.k
        }
    }

    pub fn from_position(position: usize, n: usize) -> Self {
        if position == 0 {
            StringIndexM { k: 0, l: 1 }
        } else {
            StringIndexM {
                k: (position - 1) % n + 1,
                l: (position - 1) / n + 1,
            }
        }
    }
}

impl fmt::Display for StringIndexM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{}_{}", self.k, self.l)
    }
}

/// `STR{a_1, …, a_m}`, the string of type `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringTypeM {
    chain: Chain,
    anchors: Vec<usize>,
    carrier: Carrier,
}

impl StringTypeM {
    pub fn new(chain: Chain, anchors: &[usize]) -> Result<Self> {
        let n = chain.len();
        let bad = |reason| Error::BadAnchors {
            anchors: anchors.to_vec(),
            n,
            reason,
        };
        if anchors.len() < 2 {
            return Err(bad("need at least two anchors"));
        }
        if anchors.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("anchors must be strictly increasing"));
        }
        if anchors.iter().any(|&x| x >= n) {
            return Err(bad("anchor outside the chain"));
        }
        let mut elements = Vec::with_capacity((anchors.len() - 1) * n + 1);
        elements.push(two_valued(n, anchors[0] as u8, anchors[1] as u8, 0));
        for w in anchors.windows(2) {
            for k in 1..=n {
                elements.push(two_valued(n, w[0] as u8, w[1] as u8, k));
            }
        }
        Ok(StringTypeM {
            chain,
            anchors: anchors.to_vec(),
            carrier: Carrier::from_sorted(chain, elements),
        })
    }

    /// `STR(Ê_{C_n})`, the string over every point `0, 1, …, n-1`.
    pub fn full(chain: Chain) -> Result<Self> {
        let anchors: Vec<usize> = (0..chain.len()).collect();
        Self::new(chain, &anchors)
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn n(&self) -> usize {
        self.chain.len()
    }

    /// Number of anchors.
    pub fn m(&self) -> usize {
        self.anchors.len()
    }

    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    /// `a_ℓ`, 1-based.
    pub fn anchor(&self, l: usize) -> usize {
        self.anchors[l - 1]
    }

    pub fn is_full(&self) -> bool {
        self.anchors.len() == self.n()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical index for `(k, ℓ)`.
    pub fn index(&self, k: usize, l: usize) -> Result<StringIndexM> {
        StringIndexM::new(k, l, self.n(), self.m())
    }

    pub fn element(&self, idx: StringIndexM) -> &ChainEndomorphism {
        &self.carrier.elements()[idx.position(self.n())]
    }

    /// `α_{k,ℓ}` from a possibly non-canonical pair.
    pub fn element_at(&self, k: usize, l: usize) -> Result<&ChainEndomorphism> {
        Ok(self.element(self.index(k, l)?))
    }

    pub fn index_of(&self, f: &ChainEndomorphism) -> Option<StringIndexM> {
        self.carrier
            .index_of(f)
            .map(|p| StringIndexM::from_position(p, self.n()))
    }

    /// All canonical indices in carrier order.
    pub fn indices(&self) -> impl Iterator<Item = StringIndexM> + '_ {
        (0..self.len()).map(|p| StringIndexM::from_position(p, self.n()))
    }

    /// The two-anchor piece `STR{a_ℓ, a_{ℓ+1}}`.
    pub fn segment(&self, l: usize) -> Result<StringType2> {
        if l == 0 || l >= self.m() {
            return Err(Error::IndexOutOfRange {
                index: l,
                max: self.m() - 1,
            });
        }
        StringType2::new(self.chain, self.anchor(l), self.anchor(l + 1))
    }

    /// Index of `α_{k,ℓ} · α_{s,r}` from the product bands, without composing:
    /// `(0, r)` when `s ≤ n - a_{ℓ+1} - 1`, `(k, r)` when
    /// `n - a_{ℓ+1} ≤ s ≤ n - a_ℓ - 1`, and `(n, r)` when `s ≥ n - a_ℓ`.
    pub fn mul_index(&self, x: StringIndexM, y: StringIndexM) -> Result<StringIndexM> {
        let n = self.n();
        let (k, l) = (x.k, x.l);
        let (s, r) = (y.k, y.l);
        let lo = self.anchor(l);
        let hi = self.anchor(l + 1);
        let k_out = if s + hi < n {
            0
        } else if s + lo < n {
            k
        } else {
            n
        };
        self.index(k_out, r)
    }

    /// The constants `κ_{a_1}, …, κ_{a_m}`.
    pub fn constants_ideal(&self) -> Subfamily {
        let n = self.n();
        let positions: Vec<usize> = (0..self.m()).map(|i| i * n).collect();
        let elements = positions
            .iter()
            .map(|&p| self.carrier.elements()[p].clone())
            .collect();
        Subfamily {
            kind: SubfamilyKind::Constants,
            positions,
            carrier: Carrier::from_sorted(self.chain, elements),
        }
    }

    pub fn label(&self, idx: StringIndexM) -> String {
        idx.to_string()
    }
}

/// A pair whose product (or sum) escapes a candidate ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    pub rule: &'static str,
    pub left: ChainEndomorphism,
    pub right: ChainEndomorphism,
    pub result: ChainEndomorphism,
}

/// Checks that `sub` is closed under addition and absorbs multiplication by
/// `ambient` on both sides. Scans additive pairs first, then for each member
/// `c` and each ambient `x` the products `x·c` and `c·x`, in carrier order.
pub fn is_ideal(sub: &Carrier, ambient: &Carrier) -> Result<Option<IdealWitness>> {
    if !sub.is_subset_of(ambient) {
        return Err(Error::NotASubset);
    }
    for x in sub {
        for y in sub {
            let sum = x.join(y);
            if !sub.contains(&sum) {
                return Ok(Some(IdealWitness {
                    rule: "sum",
                    left: x.clone(),
                    right: y.clone(),
                    result: sum,
                }));
            }
        }
    }
    for c in sub {
        for x in ambient {
            let left = x.then(c);
            if !sub.contains(&left) {
                return Ok(Some(IdealWitness {
                    rule: "left product",
                    left: x.clone(),
                    right: c.clone(),
                    result: left,
                }));
            }
            let right = c.then(x);
            if !sub.contains(&right) {
                return Ok(Some(IdealWitness {
                    rule: "right product",
                    left: c.clone(),
                    right: x.clone(),
                    result: right,
                }));
            }
        }
    }
    Ok(None)
}
