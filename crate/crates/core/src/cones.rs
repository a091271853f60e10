//! Rational polyhedral cones of dimension at most 6 and the conversion from a
//! divisor/curve pairing matrix to the Nef cone it certifies.
//!
//! All arithmetic is exact over `Ratio<T>`. Cones are stored in canonical
//! form: every generator is a primitive integer vector and the generator
//! list is sorted and free of duplicates, so `==` is set equality of rays.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ExactInteger;

/// Largest ambient dimension [`dual_cone`] accepts.
pub const MAX_DIM: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone<T> {
    ambient_dim: usize,
    generators: Vec<Vec<T>>,
}

impl<T: ExactInteger> Cone<T> {
    /// Cone spanned by rational vectors.
    pub fn new(ambient_dim: usize, generators: Vec<Vec<Ratio<T>>>) -> Result<Self> {
        let mut out = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != ambient_dim {
                return Err(Error::LengthMismatch {
                    expected: ambient_dim,
                    got: g.len(),
                });
            }
            out.push(primitive(&g).ok_or(Error::ZeroGenerator)?);
        }
        out.sort();
        out.dedup();
        Ok(Cone {
            ambient_dim,
            generators: out,
        })
    }

    /// Cone spanned by integer vectors.
    pub fn from_integer(ambient_dim: usize, generators: Vec<Vec<T>>) -> Result<Self> {
        Self::new(
            ambient_dim,
            generators
                .into_iter()
                .map(|g| g.into_iter().map(Ratio::from_integer).collect())
                .collect(),
        )
    }

    /// The nonnegative orthant spanned by the standard basis.
    pub fn orthant(dim: usize) -> Self {
        let gens = (0..dim).map(|i| unit::<T>(dim, i)).collect();
        Self::from_integer(dim, gens).expect("unit vectors are nonzero")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<T>] {
        &self.generators
    }

    fn rational_generators(&self) -> Vec<Vec<Ratio<T>>> {
        self.generators.iter().map(|g| to_rational(g)).collect()
    }

    /// Dimension of the linear span.
    pub fn rank(&self) -> usize {
        rank(&self.rational_generators())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Generators are linearly independent.
    pub fn is_simplicial(&self) -> bool {
        self.rank() == self.generators.len()
    }

    /// Contains no line. A nonnegative relation among generators would put
    /// some `-g` inside the cone, so it suffices to test each `-g`.
    pub fn is_pointed(&self) -> bool {
        self.generators.iter().all(|g| {
            let neg: Vec<Ratio<T>> = g.iter().map(|x| Ratio::from_integer(-x.clone())).collect();
            !contains(self, &neg).expect("same dimension")
        })
    }

    /// Drops generators that lie in the cone of the remaining ones. For a
    /// pointed cone the result is the set of extreme rays.
    pub fn reduced(&self) -> Self {
        let mut keep = self.generators.clone();
        let mut i = 0;
        while i < keep.len() {
            let others: Vec<Vec<T>> = keep
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let rest = Cone {
                ambient_dim: self.ambient_dim,
                generators: others,
            };
            if contains(&rest, &to_rational(&keep[i])).expect("same dimension") {
                keep.remove(i);
            } else {
                i += 1;
            }
        }
        Cone {
            ambient_dim: self.ambient_dim,
            generators: keep,
        }
    }
}

fn unit<T: ExactInteger>(dim: usize, i: usize) -> Vec<T> {
    (0..dim)
        .map(|j| if i == j { T::one() } else { T::zero() })
        .collect()
}

fn to_rational<T: ExactInteger>(v: &[T]) -> Vec<Ratio<T>> {
    v.iter().cloned().map(Ratio::from_integer).collect()
}

/// Positive multiple of `v` with coprime integer entries; `None` for zero.
fn primitive<T: ExactInteger>(v: &[Ratio<T>]) -> Option<Vec<T>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v.iter().fold(T::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<T> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    let gcd = ints.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    Some(ints.into_iter().map(|x| x / gcd.clone()).collect())
}

fn dot<T: ExactInteger>(a: &[Ratio<T>], b: &[Ratio<T>]) -> Ratio<T> {
    a.iter()
        .zip(b)
        .fold(Ratio::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Reduced row echelon form; returns the pivot columns.
fn rref<T: ExactInteger>(m: &mut [Vec<Ratio<T>>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (x, p) in line.iter_mut().zip(&pivot) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn rank<T: ExactInteger>(rows: &[Vec<Ratio<T>>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of `{x : <r, x> = 0 for every row r}` in `R^dim`.
fn nullspace<T: ExactInteger>(rows: &[Vec<Ratio<T>>], dim: usize) -> Vec<Vec<Ratio<T>>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, dim);
    (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Ratio::zero(); dim];
            x[free] = Ratio::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[r][free].clone();
            }
            x
        })
        .collect()
}

/// Solves `sum_i c_i cols[i] = v` for linearly independent `cols`.
fn solve<T: ExactInteger>(cols: &[&Vec<Ratio<T>>], v: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
    let n = cols.len();
    let mut m: Vec<Vec<Ratio<T>>> = (0..v.len())
        .map(|r| {
            let mut row: Vec<Ratio<T>> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, n + 1);
    if pivots.contains(&n) || pivots.len() < n {
        return None;
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `{y : <y, g> >= 0 for every generator g}`.
///
/// With `L` the span of the generators (rank `r`), each extreme ray of the
/// dual inside `L` is orthogonal to some `r-1` independent generators; it is
/// found as the one-dimensional nullspace of those generators together with
/// a basis of `L^perp`, then oriented and kept if it is nonnegative on all
/// generators. `L^perp` itself is the lineality space and enters as `±` pairs.
pub fn dual_cone<T: ExactInteger>(c: &Cone<T>) -> Result<Cone<T>> {
    let dim = c.ambient_dim;
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    let gens = c.rational_generators();
    let perp = nullspace(&gens, dim);
    let r = dim - perp.len();

    let mut out: Vec<Vec<Ratio<T>>> = Vec::new();
    for v in &perp {
        out.push(v.clone());
        out.push(v.iter().map(|x| -x.clone()).collect());
    }
    if r > 0 {
        for subset in combinations(gens.len(), r - 1) {
            let mut eqs: Vec<Vec<Ratio<T>>> = subset.iter().map(|&i| gens[i].clone()).collect();
            eqs.extend(perp.iter().cloned());
            let ns = nullspace(&eqs, dim);
            if ns.len() != 1 {
                continue;
            }
            let y = &ns[0];
            let signs: Vec<Ratio<T>> = gens.iter().map(|g| dot(y, g)).collect();
            if signs.iter().all(|s| !s.is_negative()) {
                out.push(y.clone());
            } else if signs.iter().all(|s| !s.is_positive()) {
                out.push(y.iter().map(|x| -x.clone()).collect());
            }
        }
    }
    Cone::new(dim, out)
}

/// Exact membership: is `v` a nonnegative combination of the generators?
///
/// By Carathéodory it is enough to try linearly independent subsets of
/// generators, each of which gives a unique candidate solution.
pub fn contains<T: ExactInteger>(c: &Cone<T>, v: &[Ratio<T>]) -> Result<bool> {
    if v.len() != c.ambient_dim {
        return Err(Error::LengthMismatch {
            expected: c.ambient_dim,
            got: v.len(),
        });
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let gens = c.rational_generators();
    let max = c.rank().min(gens.len());
    for size in 1..=max {
        for subset in combinations(gens.len(), size) {
            let cols: Vec<&Vec<Ratio<T>>> = subset.iter().map(|&i| &gens[i]).collect();
            if let Some(coef) = solve(&cols, v) {
                if coef.iter().all(|x| !x.is_negative()) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Integer-vector convenience wrapper around [`contains`].
pub fn contains_integer<T: ExactInteger>(c: &Cone<T>, v: &[T]) -> Result<bool> {
    contains(c, &to_rational(v))
}

/// `c1 x c2` in `R^(d1+d2)`.
pub fn product_cone<T: ExactInteger>(c1: &Cone<T>, c2: &Cone<T>) -> Cone<T> {
    let (d1, d2) = (c1.ambient_dim, c2.ambient_dim);
    let left = c1.generators.iter().map(|g| {
        let mut v = g.clone();
        v.extend(std::iter::repeat_n(T::zero(), d2));
        v
    });
    let right = c2.generators.iter().map(|g| {
        let mut v = vec![T::zero(); d1];
        v.extend(g.iter().cloned());
        v
    });
    Cone::from_integer(d1 + d2, left.chain(right).collect()).expect("nonzero factors")
}

/// Intersection numbers `D_i . gamma_j`: rows are divisors, columns curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing<T> {
    entries: Vec<Vec<T>>,
    divisor_labels: Vec<String>,
    curve_labels: Vec<String>,
}

impl<T: ExactInteger> Pairing<T> {
    pub fn new(
        entries: Vec<Vec<T>>,
        divisor_labels: Vec<String>,
        curve_labels: Vec<String>,
    ) -> Result<Self> {
        let r = entries.len();
        if entries.iter().any(|row| row.len() != r) {
            return Err(Error::MalformedPairing("matrix is not square".into()));
        }
        if divisor_labels.len() != r || curve_labels.len() != r {
            return Err(Error::MalformedPairing(format!(
                "expected {r} divisor and curve labels"
            )));
        }
        for labels in [&divisor_labels, &curve_labels] {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != labels.len() {
                return Err(Error::MalformedPairing("labels must be distinct".into()));
            }
        }
        Ok(Pairing {
            entries,
            divisor_labels,
            curve_labels,
        })
    }

    pub fn identity(divisor_labels: Vec<String>, curve_labels: Vec<String>) -> Result<Self> {
        let r = divisor_labels.len();
        let entries = (0..r).map(|i| unit(r, i)).collect();
        Self::new(entries, divisor_labels, curve_labels)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn divisor_labels(&self) -> &[String] {
        &self.divisor_labels
    }

    pub fn curve_labels(&self) -> &[String] {
        &self.curve_labels
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    /// Curve classes in divisor coordinates: column `j` is `gamma_j`.
    pub fn curve_vectors(&self) -> Vec<Vec<T>> {
        (0..self.size())
            .map(|j| self.entries.iter().map(|row| row[j].clone()).collect())
            .collect()
    }
}

/// Nef cone certified by a pairing: with a divisor written `sum x_i D_i`,
/// the cone `{x : x^T P >= 0}`, the dual of the cone spanned by the curves.
pub fn nef_from_pairing<T: ExactInteger>(p: &Pairing<T>) -> Result<Cone<T>> {
    let r = p.size();
    if r > MAX_DIM {
        return Err(Error::DimensionTooLarge(r));
    }
    let rows: Vec<Vec<Ratio<T>>> = p.entries.iter().map(|row| to_rational(row)).collect();
    if rank(&rows) < r {
        return Err(Error::SingularPairing);
    }
    let curves = Cone::from_integer(r, p.curve_vectors())?;
    dual_cone(&curves)
}

impl<T: ExactInteger + fmt::Display> fmt::Display for Cone<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in g.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "> in dim {}", self.ambient_dim)
    }
}

fn numbers<T: fmt::Display, E: serde::ser::Error>(
    v: &[T],
) -> std::result::Result<Vec<serde_json::Number>, E> {
    v.iter()
        .map(|x| crate::json::int_to_number(x).map_err(E::custom))
        .collect()
}

fn integers<T: FromStr, E: de::Error>(v: &[serde_json::Number]) -> std::result::Result<Vec<T>, E> {
    v.iter()
        .map(|x| crate::json::number_to_int(x).map_err(E::custom))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct ConeRepr {
    dim: usize,
    generators: Vec<Vec<serde_json::Number>>,
}

impl<T: ExactInteger + fmt::Display> Serialize for Cone<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ConeRepr {
            dim: self.ambient_dim,
            generators: self
                .generators
                .iter()
                .map(|g| numbers::<_, S::Error>(g))
                .collect::<std::result::Result<_, _>>()?,
        }
        .serialize(serializer)
    }
}

impl<'de, T: ExactInteger + FromStr> Deserialize<'de> for Cone<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ConeRepr::deserialize(deserializer)?;
        let gens = repr
            .generators
            .iter()
            .map(|g| integers::<T, D::Error>(g))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Cone::from_integer(repr.dim, gens).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PairingRepr {
    divisors: Vec<String>,
    curves: Vec<String>,
    entries: Vec<Vec<serde_json::Number>>,
}

impl<T: ExactInteger + fmt::Display> Serialize for Pairing<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PairingRepr {
            divisors: self.divisor_labels.clone(),
            curves: self.curve_labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| numbers::<_, S::Error>(row))
                .collect::<std::result::Result<_, _>>()?,
        }
        .serialize(serializer)
    }
}

impl<'de, T: ExactInteger + FromStr> Deserialize<'de> for Pairing<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PairingRepr::deserialize(deserializer)?;
        let entries = repr
            .entries
            .iter()
            .map(|row| integers::<T, D::Error>(row))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Pairing::new(entries, repr.divisors, repr.curves).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RationalCone;
    use num_bigint::BigInt;

    fn cone(dim: usize, gens: &[&[i64]]) -> RationalCone {
        RationalCone::from_integer(
            dim,
            gens.iter()
                .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn canonical_form() {
        let c = RationalCone::new(
            2,
            vec![
                vec![
                    Ratio::new(BigInt::from(1), BigInt::from(2)),
                    Ratio::from_integer(BigInt::from(1)),
                ],
                vec![
                    Ratio::from_integer(BigInt::from(2)),
                    Ratio::from_integer(BigInt::from(4)),
                ],
                vec![
                    Ratio::from_integer(BigInt::from(3)),
                    Ratio::from_integer(BigInt::from(0)),
                ],
            ],
        )
        .unwrap();
        assert_eq!(c, cone(2, &[&[1, 0], &[1, 2]]));
        assert_eq!(
            RationalCone::from_integer(2, vec![v(&[0, 0])]),
            Err(Error::ZeroGenerator)
        );
        assert!(RationalCone::from_integer(2, vec![v(&[1])]).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            dual_cone(&RationalCone::orthant(3)).unwrap(),
            RationalCone::orthant(3)
        );
        assert_eq!(
            dual_cone(&cone(2, &[&[1, 0], &[1, 2]])).unwrap(),
            cone(2, &[&[0, 1], &[2, -1]])
        );
        assert_eq!(
            dual_cone(&RationalCone::orthant(7)),
            Err(Error::DimensionTooLarge(7))
        );
    }

    #[test]
    fn dual_of_lower_dimensional_and_trivial_cones() {
        // a ray in the plane: dual is a half-plane
        let ray = cone(2, &[&[1, 0]]);
        assert_eq!(
            dual_cone(&ray).unwrap(),
            cone(2, &[&[0, -1], &[0, 1], &[1, 0]])
        );
        let zero = cone(2, &[]);
        assert_eq!(
            dual_cone(&zero).unwrap(),
            cone(2, &[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn membership() {
        let q = RationalCone::orthant(2);
        assert!(contains_integer(&q, &v(&[1, 1])).unwrap());
        assert!(!contains_integer(&q, &v(&[-1, 0])).unwrap());
        assert!(!contains_integer(&cone(2, &[&[1, 0], &[1, 2]]), &v(&[1, 3])).unwrap());
        assert!(contains_integer(&cone(2, &[&[1, 0], &[1, 2]]), &v(&[3, 2])).unwrap());
        assert!(contains_integer(&q, &v(&[0, 0])).unwrap());
        assert!(contains_integer(&q, &v(&[1])).is_err());
    }

    #[test]
    fn products() {
        let o3 = RationalCone::orthant(3);
        assert_eq!(product_cone(&o3, &o3), RationalCone::orthant(6));
        let p = product_cone(&RationalCone::orthant(2), &cone(2, &[&[1, 0], &[1, 2]]));
        assert_eq!(p.ambient_dim(), 4);
        assert_eq!(p.generators().len(), 4);
    }

    #[test]
    fn structural_predicates() {
        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]);
        assert!(c.is_pointed());
        assert!(!c.is_simplicial());
        assert!(!cone(2, &[&[1, 0], &[-1, 0]]).is_pointed());
        let redundant = cone(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(redundant.reduced(), RationalCone::orthant(2));
    }

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn nef_from_pairing_examples() {
        let id =
            Pairing::<BigInt>::identity(labels(&["D1", "D2", "D3"]), labels(&["g1", "g2", "g3"]))
                .unwrap();
        assert_eq!(nef_from_pairing(&id).unwrap(), RationalCone::orthant(3));
        let upper = Pairing::new(
            vec![v(&[1, 1]), v(&[0, 1])],
            labels(&["D1", "D2"]),
            labels(&["g1", "g2"]),
        )
        .unwrap();
        assert_eq!(
            nef_from_pairing(&upper).unwrap(),
            cone(2, &[&[0, 1], &[1, -1]])
        );
        let one = Pairing::<BigInt>::identity(labels(&["D1"]), labels(&["g1"])).unwrap();
        assert_eq!(nef_from_pairing(&one).unwrap(), RationalCone::orthant(1));
        let singular = Pairing::new(
            vec![v(&[1, 2]), v(&[2, 4])],
            labels(&["D1", "D2"]),
            labels(&["g1", "g2"]),
        )
        .unwrap();
        assert_eq!(nef_from_pairing(&singular), Err(Error::SingularPairing));
    }

    #[test]
    fn pairing_validation() {
        assert!(Pairing::new(vec![v(&[1, 0])], labels(&["a"]), labels(&["b"])).is_err());
        assert!(Pairing::<BigInt>::identity(labels(&["a", "a"]), labels(&["x", "y"])).is_err());
    }

    #[test]
    fn small_integer_backend() {
        let c: Cone<i64> = Cone::from_integer(2, vec![vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(
            dual_cone(&c).unwrap(),
            Cone::from_integer(2, vec![vec![0, 1], vec![2, -1]]).unwrap()
        );
    }

    #[test]
    fn json_form() {
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"dim":2,"generators":[[1,0],[1,2]]}"#);
        assert_eq!(serde_json::from_str::<RationalCone>(&s).unwrap(), c);
        // input is canonicalised on read
        let messy: RationalCone =
            serde_json::from_str(r#"{"dim":2,"generators":[[2,4],[3,0]]}"#).unwrap();
        assert_eq!(messy, c);
        assert!(serde_json::from_str::<RationalCone>(r#"{"dim":2,"generators":[[0,0]]}"#).is_err());
    }
}
