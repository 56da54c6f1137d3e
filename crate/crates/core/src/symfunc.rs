//! Homogeneous symmetric functions as exact coefficient maps over the
//! monomial, Schur, complete homogeneous and power-sum bases, together with
//! the Kostka and inverse Kostka matrices that connect the first three.
//!
//! Index conventions (used everywhere in the crate):
//!
//! ```text
//! s_λ = Σ_μ K[λ][μ] m_μ        m_λ = Σ_μ Kinv[λ][μ] s_μ
//! h_κ = Σ_ν K[ν][κ] s_ν        s_ν = Σ_κ Kinv[κ][ν] h_κ
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions_of_with, Partition};
use crate::tableau::kostka;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Schur,
    Homogeneous,
    PowerSum,
}

impl Basis {
    pub fn tag(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
            Basis::Homogeneous => 'h',
            Basis::PowerSum => 'p',
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "m" | "monomial" => Ok(Basis::Monomial),
            "s" | "schur" => Ok(Basis::Schur),
            "h" | "homogeneous" => Ok(Basis::Homogeneous),
            "p" | "powersum" => Ok(Basis::PowerSum),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "unknown basis tag".into(),
            }),
        }
    }

    /// Whether coefficients in this basis are required to be integers.
    pub fn is_integral(self) -> bool {
        self != Basis::PowerSum
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// A homogeneous symmetric function of a fixed degree in a fixed basis.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = SymFunc::zero(basis, lambda.size());
        f.coeffs.insert(lambda.clone(), BigRational::one());
        f
    }

    /// Builds a function from `(partition, coefficient)` pairs, summing
    /// repeated keys. Every key must have size `degree`.
    pub fn from_terms<I, C>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigRational>,
    {
        let mut f = SymFunc::zero(basis, degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch {
                    left: lambda.size(),
                    right: degree,
                });
            }
            f.add_term(lambda, c.into());
        }
        if basis.is_integral() && !f.is_integral() {
            return Err(Error::InvariantViolation(format!(
                "non-integer coefficient in the {basis} basis"
            )));
        }
        Ok(f)
    }

    pub(crate) fn from_map_unchecked(
        basis: Basis,
        degree: usize,
        mut coeffs: BTreeMap<Partition, BigRational>,
    ) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        SymFunc {
            basis,
            degree,
            coeffs,
        }
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, c| !c.is_zero());
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Non-zero terms, largest partition first in reverse lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter().rev()
    }

    /// The revlex-largest partition with a non-zero coefficient.
    pub fn leading_partition(&self) -> Option<&Partition> {
        self.coeffs.keys().next_back()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Coefficients as integers; fails when any coefficient is fractional.
    pub fn integer_coeffs(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.coeffs
            .iter()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok((k.clone(), c.to_integer()))
                } else {
                    Err(Error::InvariantViolation(format!(
                        "coefficient {c} at {k} is not an integer"
                    )))
                }
            })
            .collect()
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.tag(),
                right: other.basis.tag(),
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

pub fn add(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    f.check_compatible(g)?;
    let mut out = f.clone();
    for (k, c) in &g.coeffs {
        out.add_term(k.clone(), c.clone());
    }
    Ok(out)
}

pub fn scale(c: &BigRational, f: &SymFunc) -> SymFunc {
    let coeffs = f.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
    SymFunc::from_map_unchecked(f.basis, f.degree, coeffs)
}

pub fn coefficient(f: &SymFunc, lambda: &Partition) -> BigRational {
    f.coefficient(lambda)
}

fn render_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// `s[4] + s[2,2]`, `2·m[2,1,1]`, `1/2·p[1,1] - 1/2·p[2]`; zero renders as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{}·", render_coeff(&magnitude))?;
            }
            write!(f, "{}[{}]", self.basis.tag(), lambda)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis.tag().to_string(),
            degree: self.degree,
            terms: self
                .terms()
                .map(|(k, c)| TermJson {
                    partition: k.clone(),
                    coeff: render_coeff(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SymFuncJson::deserialize(deserializer)?;
        let basis = Basis::from_tag(&raw.basis).map_err(D::Error::custom)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let c: BigRational = t
                    .coeff
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.partition, c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        SymFunc::from_terms(basis, raw.degree, terms).map_err(D::Error::custom)
    }
}

/// Kostka and inverse Kostka matrices for all partitions of one degree.
///
/// Both are unitriangular: `K[λ][μ] = Kinv[λ][μ] = 0` whenever `λ < μ` in
/// reverse lexicographic order, and both diagonals are 1.
#[derive(Debug)]
pub struct KostkaMatrix {
    degree: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    k: Vec<Vec<BigInt>>,
    kinv: Vec<Vec<BigInt>>,
}

impl KostkaMatrix {
    fn compute(n: usize, limits: &Limits) -> Result<Self> {
        let partitions = partitions_of_with(n, limits)?;
        let size = partitions.len();
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        // partitions[0] is the largest, so K[i][j] can be non-zero only for j >= i.
        let mut k = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            for j in i..size {
                k[i][j] = BigInt::from(kostka(&partitions[i], &partitions[j])?);
            }
        }

        // Back-substitution for the upper unitriangular inverse, last row first.
        let mut kinv = vec![vec![BigInt::zero(); size]; size];
        #[allow(clippy::needless_range_loop)]
        for i in (0..size).rev() {
            kinv[i][i] = BigInt::one();
            for j in i + 1..size {
                let mut acc = BigInt::zero();
                for t in i + 1..=j {
                    if !k[i][t].is_zero() && !kinv[t][j].is_zero() {
                        acc += &k[i][t] * &kinv[t][j];
                    }
                }
                kinv[i][j] = -acc;
            }
        }

        Ok(KostkaMatrix {
            degree: n,
            partitions,
            index,
            k,
            kinv,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Row/column labels, largest first.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    fn idx(&self, lambda: &Partition) -> usize {
        self.index_of(lambda)
            .unwrap_or_else(|| panic!("{lambda} is not a partition of {}", self.degree))
    }

    /// `K[λ][μ]`. Panics when either argument is not a partition of the degree.
    pub fn k(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.k[self.idx(lambda)][self.idx(mu)]
    }

    /// `Kinv[λ][μ]`. Panics when either argument is not a partition of the degree.
    pub fn kinv(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.kinv[self.idx(lambda)][self.idx(mu)]
    }

    /// Dense rows of `K` in the order of [`Self::partitions`].
    pub fn k_rows(&self) -> &[Vec<BigInt>] {
        &self.k
    }

    pub fn kinv_rows(&self) -> &[Vec<BigInt>] {
        &self.kinv
    }
}

type MatrixCache = RwLock<HashMap<usize, Arc<KostkaMatrix>>>;

fn cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Kostka matrix of degree `n`, computed once per process.
pub fn kostka_matrix(n: usize) -> Result<Arc<KostkaMatrix>> {
    kostka_matrix_with(n, &Limits::default())
}

pub fn kostka_matrix_with(n: usize, limits: &Limits) -> Result<Arc<KostkaMatrix>> {
    limits.check_partition_size(n)?;
    if let Some(m) = cache().read().expect("kostka cache poisoned").get(&n) {
        return Ok(Arc::clone(m));
    }
    let computed = Arc::new(KostkaMatrix::compute(n, limits)?);
    let mut guard = cache().write().expect("kostka cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(computed)))
}

fn integral(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Applies `out[target] += f[source] * coeff(source, target)` over the degree's
/// partitions.
fn linear_map(
    f: &SymFunc,
    target: Basis,
    km: &KostkaMatrix,
    coeff: impl Fn(usize, usize) -> BigInt,
) -> SymFunc {
    let mut out = BTreeMap::new();
    for (lambda, c) in &f.coeffs {
        let src = km.idx(lambda);
        for (dst, mu) in km.partitions.iter().enumerate() {
            let entry = coeff(src, dst);
            if !entry.is_zero() {
                *out.entry(mu.clone()).or_insert_with(BigRational::zero) += c * integral(&entry);
            }
        }
    }
    SymFunc::from_map_unchecked(target, f.degree, out)
}

fn convert_among_msh(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    use Basis::*;
    let km = kostka_matrix(f.degree)?;
    let out = match (f.basis, target) {
        (Schur, Monomial) => linear_map(f, target, &km, |l, m| km.k[l][m].clone()),
        (Monomial, Schur) => linear_map(f, target, &km, |l, m| km.kinv[l][m].clone()),
        (Schur, Homogeneous) => linear_map(f, target, &km, |nu, kappa| km.kinv[kappa][nu].clone()),
        (Homogeneous, Schur) => linear_map(f, target, &km, |kappa, nu| km.k[nu][kappa].clone()),
        (Monomial, Homogeneous) | (Homogeneous, Monomial) => {
            return convert_among_msh(&convert_among_msh(f, Schur)?, target)
        }
        (from, to) => {
            return Err(Error::UnsupportedConversion {
                from: from.tag(),
                to: to.tag(),
            })
        }
    };
    if !out.is_integral() {
        return Err(Error::InvariantViolation(format!(
            "{} -> {} conversion produced a fractional coefficient",
            f.basis, target
        )));
    }
    Ok(out)
}

/// Re-expresses `f` in `target`. Conversions touching the power-sum basis are
/// delegated to [`crate::oracle`].
pub fn convert(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    if f.basis == target {
        return Ok(f.clone());
    }
    if f.basis == Basis::PowerSum || target == Basis::PowerSum {
        return crate::oracle::convert_powersum(f, target);
    }
    convert_among_msh(f, target)
}

/// The Hall inner product, for which the Schur functions are orthonormal.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<BigRational> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch {
            left: f.degree,
            right: g.degree,
        });
    }
    let fs = convert(f, Basis::Schur)?;
    let gs = convert(g, Basis::Schur)?;
    Ok(fs
        .coeffs
        .iter()
        .filter_map(|(k, c)| gs.coeffs.get(k).map(|d| c * d))
        .fold(BigRational::zero(), |acc, x| acc + x))
}
