//! The cohomology ring of the Grassmannian `G(k,n)` in the Schubert basis.
//!
//! Products go through [`lr_coefficient`]; the Pieri rules are implemented
//! separately by strip enumeration so that each path can check the other.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::combinat::{lr_coefficient, partitions_of_size_in_box, BoxConstraint, Partition};
use crate::error::{Error, Result};

/// The Grassmannian `G(k,n)` of `k`-planes in `C^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    k: usize,
    n: usize,
}

impl RingContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(RingContext { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bx(&self) -> BoxConstraint {
        BoxConstraint::new(self.k, self.n - self.k)
    }

    /// Complex dimension `k(n-k)`.
    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn point_class(&self) -> Partition {
        self.bx().full()
    }

    /// The basis element `sigma_lambda`.
    pub fn sigma(&self, lambda: &Partition) -> Result<SchubertExpansion> {
        self.bx().check(lambda)?;
        Ok(SchubertExpansion::basis(lambda.clone()))
    }

    fn check_expansion(&self, a: &SchubertExpansion) -> Result<()> {
        a.terms.keys().try_for_each(|p| self.bx().check(p))
    }
}

/// A finite integer combination of Schubert classes with no zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchubertExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchubertExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchubertExpansion { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
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

    /// The common size of all keys, or `None` if the sizes differ or there
    /// are no terms.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }
}

/// Text form, e.g. `σ[2] + σ[1,1]`.
impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{sep}σ{p}")?;
            } else {
                write!(f, "{sep}{abs}σ{p}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: serde_json::Number,
}

impl Serialize for SchubertExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| {
                Ok(TermRepr {
                    partition: p.clone(),
                    coeff: crate::json::int_to_number(c).map_err(serde::ser::Error::custom)?,
                })
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchubertExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut out = SchubertExpansion::zero();
        for t in terms {
            let c: BigInt = crate::json::number_to_int(&t.coeff).map_err(de::Error::custom)?;
            if c.is_zero() {
                return Err(de::Error::custom("zero coefficients are not stored"));
            }
            out.add_term(t.partition, c);
        }
        Ok(out)
    }
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, BigUint>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, BigUint>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoised [`lr_coefficient`]. Entries are written at most once with the
/// value the enumeration returns, so concurrent callers always agree.
pub fn lr_cached(lambda: &Partition, nu: &Partition, mu: &Partition) -> BigUint {
    let key = (lambda.clone(), nu.clone(), mu.clone());
    if let Some(v) = lr_cache().read().expect("lr cache poisoned").get(&key) {
        return v.clone();
    }
    let v = lr_coefficient(lambda, nu, mu);
    lr_cache()
        .write()
        .expect("lr cache poisoned")
        .entry(key)
        .or_insert_with(|| v.clone());
    v
}

/// `sigma_lambda * sigma_(p)`: all horizontal strips of size `p` inside the box.
pub fn pieri_row(ctx: &RingContext, lambda: &Partition, p: usize) -> Result<SchubertExpansion> {
    let bx = ctx.bx();
    bx.check(lambda)?;
    if p > bx.cols {
        return Err(Error::OutOfRange {
            what: "p",
            value: p as i64,
            range: format!("0..={}", bx.cols),
        });
    }

    fn walk(
        row: usize,
        left: usize,
        lambda: &Partition,
        bx: BoxConstraint,
        cur: &mut Vec<u32>,
        out: &mut SchubertExpansion,
    ) {
        if row == bx.rows {
            if left == 0 {
                out.add_term(
                    Partition::new(cur.clone()).expect("interlacing"),
                    BigInt::one(),
                );
            }
            return;
        }
        let lo = lambda.part(row) as usize;
        let hi = if row == 0 {
            bx.cols
        } else {
            lambda.part(row - 1) as usize
        };
        for v in lo..=hi.min(lo + left) {
            cur.push(v as u32);
            walk(row + 1, left - (v - lo), lambda, bx, cur, out);
            cur.pop();
        }
    }

    let mut out = SchubertExpansion::zero();
    walk(0, p, lambda, bx, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `sigma_lambda * sigma_(1^p)`: all vertical strips of size `p` inside the box.
pub fn pieri_column(ctx: &RingContext, lambda: &Partition, p: usize) -> Result<SchubertExpansion> {
    let bx = ctx.bx();
    bx.check(lambda)?;
    if p > bx.rows {
        return Err(Error::OutOfRange {
            what: "p",
            value: p as i64,
            range: format!("0..={}", bx.rows),
        });
    }

    fn walk(
        row: usize,
        left: usize,
        lambda: &Partition,
        bx: BoxConstraint,
        cur: &mut Vec<u32>,
        out: &mut SchubertExpansion,
    ) {
        if row == bx.rows {
            if left == 0 {
                out.add_term(Partition::new(cur.clone()).expect("checked"), BigInt::one());
            }
            return;
        }
        let base = lambda.part(row);
        for add in 0..=u32::from(left > 0) {
            let v = base + add;
            if v as usize > bx.cols || (row > 0 && v > cur[row - 1]) {
                continue;
            }
            cur.push(v);
            walk(row + 1, left - add as usize, lambda, bx, cur, out);
            cur.pop();
        }
    }

    let mut out = SchubertExpansion::zero();
    walk(0, p, lambda, bx, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The cup product in `H^*(G(k,n))`; classes outside the box vanish.
pub fn multiply(
    ctx: &RingContext,
    a: &SchubertExpansion,
    b: &SchubertExpansion,
) -> Result<SchubertExpansion> {
    ctx.check_expansion(a)?;
    ctx.check_expansion(b)?;
    let bx = ctx.bx();
    let mut by_size: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
    let mut out = SchubertExpansion::zero();
    for (lambda, ca) in a.terms() {
        for (mu, cb) in b.terms() {
            let size = lambda.size() + mu.size();
            if size > bx.area() {
                continue;
            }
            let targets = by_size
                .entry(size)
                .or_insert_with(|| partitions_of_size_in_box(bx, size));
            for nu in targets.iter() {
                if !nu.contains(lambda) || !nu.contains(mu) {
                    continue;
                }
                let c = lr_cached(lambda, mu, nu);
                if !c.is_zero() {
                    out.add_term(nu.clone(), BigInt::from(c) * ca * cb);
                }
            }
        }
    }
    Ok(out)
}

/// The complementary partition in the `k x (n-k)` box.
pub fn poincare_dual(ctx: &RingContext, lambda: &Partition) -> Result<Partition> {
    let bx = ctx.bx();
    bx.check(lambda)?;
    let parts = (0..bx.rows)
        .rev()
        .map(|i| bx.cols as u32 - lambda.part(i))
        .collect();
    Partition::new(parts)
}

/// Degree of the zero-dimensional intersection `a . b`, i.e. the coefficient
/// of the point class in the product. Computes only that coefficient.
pub fn intersection_number(
    ctx: &RingContext,
    a: &SchubertExpansion,
    b: &SchubertExpansion,
) -> Result<BigInt> {
    ctx.check_expansion(a)?;
    ctx.check_expansion(b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(BigInt::zero());
    }
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        _ => return Err(Error::NotHomogeneous),
    };
    if da + db != ctx.dim() {
        return Err(Error::DimensionMismatch {
            lhs: da,
            rhs: db,
            dim: ctx.dim(),
        });
    }
    let point = ctx.point_class();
    let mut total = BigInt::zero();
    for (lambda, ca) in a.terms() {
        for (mu, cb) in b.terms() {
            total += BigInt::from(lr_cached(lambda, mu, &point)) * ca * cb;
        }
    }
    Ok(total)
}

/// Class of the linear spaces `{V : V_1 ⊂ V ⊂ V_2}` with `dim V_1 = k-1`,
/// `dim V_2 = k+m`: `k-1` rows of `n-k` followed by one row of `n-k-m`.
pub fn family_class_m1(ctx: &RingContext, m: usize) -> Result<Partition> {
    let cols = ctx.n - ctx.k;
    if m <= 2 || m > cols {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            range: format!("3..={cols}"),
        });
    }
    Ok(family_partition_m1(ctx, m))
}

/// Class of the linear spaces `{V : V_1 ⊂ V ⊂ V_2}` with `dim V_1 = k-m`,
/// `dim V_2 = k+1`: `k-m` rows of `n-k` followed by `m` rows of `n-k-1`.
pub fn family_class_m2(ctx: &RingContext, m: usize) -> Result<Partition> {
    if m <= 2 || m > ctx.k {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            range: format!("3..={}", ctx.k),
        });
    }
    Ok(family_partition_m2(ctx, m))
}

/// [`family_class_m1`] without the `m > 2` restriction; needs `m <= n-k`.
pub(crate) fn family_partition_m1(ctx: &RingContext, m: usize) -> Partition {
    let cols = (ctx.n - ctx.k) as u32;
    let mut parts = vec![cols; ctx.k - 1];
    parts.push(cols - m as u32);
    Partition::new(parts).expect("weakly decreasing")
}

/// [`family_class_m2`] without the `m > 2` restriction; needs `m <= k`.
pub(crate) fn family_partition_m2(ctx: &RingContext, m: usize) -> Partition {
    let cols = (ctx.n - ctx.k) as u32;
    let mut parts = vec![cols; ctx.k - m];
    parts.extend(std::iter::repeat_n(cols - 1, m));
    Partition::new(parts).expect("weakly decreasing")
}
