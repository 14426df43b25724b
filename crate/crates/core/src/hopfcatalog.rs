//! Symbolic exterior models for the cohomology of compact connected groups:
//! Poincare polynomials, power-map traces with a closed-form cross-check,
//! comultiplication on primitives, and the catalog of rings by type.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::Error;
use crate::report::Report;
use crate::Result;

/// Free skew-commutative algebra on generators of odd degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorModel {
    degrees: Vec<u64>,
    label: String,
}

impl ExteriorModel {
    pub fn new(label: impl Into<String>, mut degrees: Vec<u64>) -> Result<Self> {
        for &d in &degrees {
            if d % 2 == 0 {
                return Err(Error::RangeError(format!("even generator degree {}", d)));
            }
        }
        degrees.sort_unstable();
        Ok(ExteriorModel { degrees, label: label.into() })
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Total degree of the top monomial.
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

/// Coefficients of the product of (1 + t^g) over the generators.
pub fn poincare_polynomial(m: &ExteriorModel) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for &d in m.degrees() {
        let mut next = vec![BigInt::zero(); poly.len() + d as usize];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + d as usize] += c;
        }
        poly = next;
    }
    poly
}

/// Trace of the power map x -> x^l: every monomial is an eigenvector with
/// eigenvalue l^len, and the alternating sum over all monomials collapses
/// to (1 - l)^rank. Both sides are computed and compared.
pub fn power_map_lefschetz(m: &ExteriorModel, l: i64) -> Result<BigInt> {
    let r = m.rank();
    if r > 30 {
        return Err(Error::RangeError(format!("rank {} is too large to enumerate", r)));
    }
    let lb = BigInt::from(l);
    let mut sum = BigInt::zero();
    for mask in 0u64..(1 << r) {
        let mut deg = 0u64;
        let mut len = 0u32;
        for (i, &d) in m.degrees().iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg += d;
                len += 1;
            }
        }
        let term = lb.pow(len);
        if deg % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let closed = (BigInt::one() - &lb).pow(r as u32);
    if sum != closed {
        return Err(Error::InternalMismatch(format!(
            "monomial sum {} differs from closed form {}",
            sum, closed
        )));
    }
    Ok(sum)
}

/// A sum of elementary tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExpr {
    pub terms: Vec<(String, String)>,
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, b)| format!("{} (x) {}", a, b))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Comultiplication of a generator: primitives split as x(x)1 + 1(x)x.
pub fn comultiplication_primitive(m: &ExteriorModel, i: usize) -> Result<TensorExpr> {
    if i >= m.rank() {
        return Err(Error::IndexOutOfRange(format!(
            "generator {} of {}",
            i,
            m.rank()
        )));
    }
    let y = format!("y_{}", m.degrees()[i]);
    Ok(TensorExpr { terms: vec![(y.clone(), "1".into()), ("1".into(), y)] })
}

/// Multiplier of the power map on a primitive generator, derived by
/// iterating the comultiplication rule: each extra factor of the power map
/// adds one copy of the generator, and inversion negates it.
pub fn primitive_power_multiplier(m: &ExteriorModel, i: usize, k: i64) -> Result<BigInt> {
    if i >= m.rank() {
        return Err(Error::IndexOutOfRange(format!(
            "generator {} of {}",
            i,
            m.rank()
        )));
    }
    let mut acc = BigInt::zero();
    for _ in 0..k.unsigned_abs() {
        acc += 1;
    }
    if k < 0 {
        acc = -acc;
    }
    Ok(acc)
}

/// Simple type labels with their rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl LieType {
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("unknown group type {:?}", s));
        if s.len() < 2 || !s.is_ascii() {
            return Err(err());
        }
        let (head, tail) = s.split_at(1);
        let rank: u32 = tail.parse().map_err(|_| err())?;
        let t = match head {
            "A" => LieType::A(rank),
            "B" => LieType::B(rank),
            "C" => LieType::C(rank),
            "D" => LieType::D(rank),
            "E" => match rank {
                6 => LieType::E6,
                7 => LieType::E7,
                8 => LieType::E8,
                _ => return Err(Error::RangeError(format!("no type E{}", rank))),
            },
            "F" => {
                if rank == 4 {
                    LieType::F4
                } else {
                    return Err(Error::RangeError(format!("no type F{}", rank)));
                }
            }
            "G" => {
                if rank == 2 {
                    LieType::G2
                } else {
                    return Err(Error::RangeError(format!("no type G{}", rank)));
                }
            }
            _ => return Err(err()),
        };
        Ok(t)
    }

    pub fn label(&self) -> String {
        match self {
            LieType::A(l) => format!("A{}", l),
            LieType::B(l) => format!("B{}", l),
            LieType::C(l) => format!("C{}", l),
            LieType::D(l) => format!("D{}", l),
            LieType::E6 => "E6".into(),
            LieType::E7 => "E7".into(),
            LieType::E8 => "E8".into(),
            LieType::F4 => "F4".into(),
            LieType::G2 => "G2".into(),
        }
    }

    pub fn rank(&self) -> u32 {
        match *self {
            LieType::A(l) | LieType::B(l) | LieType::C(l) | LieType::D(l) => l,
            LieType::E6 => 6,
            LieType::E7 => 7,
            LieType::E8 => 8,
            LieType::F4 => 4,
            LieType::G2 => 2,
        }
    }

    /// Dimension of the compact group, as a closed form in the rank.
    pub fn dim(&self) -> u64 {
        match *self {
            LieType::A(l) => u64::from(l) * (u64::from(l) + 2),
            LieType::B(l) | LieType::C(l) => u64::from(l) * (2 * u64::from(l) + 1),
            LieType::D(l) => u64::from(l) * (2 * u64::from(l) - 1),
            LieType::E6 => 78,
            LieType::E7 => 133,
            LieType::E8 => 248,
            LieType::F4 => 52,
            LieType::G2 => 14,
        }
    }

    /// Least prime from which the integral cohomology is p-torsion free.
    pub fn torsion_free_from(&self) -> u64 {
        match self {
            LieType::A(_) | LieType::C(_) => 2,
            LieType::B(_) | LieType::D(_) | LieType::G2 => 3,
            LieType::F4 | LieType::E6 | LieType::E7 => 5,
            LieType::E8 => 7,
        }
    }
}

/// Whether mod-p cohomology has no torsion contribution for this type.
pub fn torsion_free_mod(t: LieType, p: u64) -> bool {
    p >= t.torsion_free_from()
}

/// Which generator lists to use: the ones forced by the degree-sum
/// constraint, or the printed ones reproduced verbatim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogMode {
    SigmaConsistent,
    StrictPaper,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub model: ExteriorModel,
    pub lie_type: LieType,
    pub dim: u64,
    pub rank: u32,
    pub sum_matches_dim: bool,
    pub parity_matches: bool,
}

pub fn catalog_entry(t: LieType, mode: CatalogMode) -> Result<CatalogEntry> {
    let degrees: Vec<u64> = match t {
        LieType::A(l) => {
            if l < 1 {
                return Err(Error::RangeError("type A needs rank >= 1".into()));
            }
            (1..=u64::from(l)).map(|i| 2 * i + 1).collect()
        }
        LieType::B(l) => {
            if l < 2 {
                return Err(Error::RangeError("type B needs rank >= 2".into()));
            }
            (1..=u64::from(l)).map(|i| 4 * i - 1).collect()
        }
        LieType::C(l) => {
            if l < 3 {
                return Err(Error::RangeError("type C needs rank >= 3".into()));
            }
            (1..=u64::from(l)).map(|i| 4 * i - 1).collect()
        }
        LieType::D(l) => {
            if l < 4 {
                return Err(Error::RangeError("type D needs rank >= 4".into()));
            }
            let mut d: Vec<u64> = (1..=u64::from(l) - 1).map(|i| 4 * i - 1).collect();
            if mode == CatalogMode::SigmaConsistent {
                d.push(2 * u64::from(l) - 1);
            }
            d
        }
        LieType::E6 => vec![3, 9, 11, 15, 17, 23],
        LieType::E7 => vec![3, 11, 15, 19, 23, 27, 35],
        LieType::E8 => match mode {
            CatalogMode::SigmaConsistent => vec![3, 15, 23, 27, 35, 39, 47, 59],
            CatalogMode::StrictPaper => vec![3, 15, 23, 35, 39, 47, 59],
        },
        LieType::F4 => vec![3, 11, 15, 23],
        LieType::G2 => vec![3, 11],
    };
    let model = ExteriorModel::new(t.label(), degrees)?;
    let dim = t.dim();
    let rank = t.rank();
    let sum_matches_dim = model.total_degree() == dim;
    let parity_matches = dim % 2 == u64::from(rank) % 2;
    Ok(CatalogEntry { model, lie_type: t, dim, rank, sum_matches_dim, parity_matches })
}

/// Every classical type up to the given rank plus the exceptional types.
pub fn full_catalog(mode: CatalogMode, max_rank: u32) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for l in 1..=max_rank {
        out.push(catalog_entry(LieType::A(l), mode)?);
    }
    for l in 2..=max_rank {
        out.push(catalog_entry(LieType::B(l), mode)?);
    }
    for l in 3..=max_rank {
        out.push(catalog_entry(LieType::C(l), mode)?);
    }
    for l in 4..=max_rank {
        out.push(catalog_entry(LieType::D(l), mode)?);
    }
    for t in [LieType::E6, LieType::E7, LieType::E8, LieType::F4, LieType::G2] {
        out.push(catalog_entry(t, mode)?);
    }
    Ok(out)
}

/// A compact connected group: central torus tensor simple factors.
#[derive(Clone, Debug)]
pub struct GroupModel {
    pub center: ExteriorModel,
    pub simple_factors: Vec<CatalogEntry>,
    pub pi1_center_rank: u64,
}

impl GroupModel {
    pub fn new(center_dim: usize, simple_factors: Vec<CatalogEntry>) -> Result<Self> {
        let center = ExteriorModel::new("center", vec![1; center_dim])?;
        Ok(GroupModel { center, simple_factors, pi1_center_rank: center_dim as u64 })
    }

    /// All generator degrees of the tensor product, as one exterior model.
    pub fn combined_model(&self) -> Result<ExteriorModel> {
        let mut degrees = self.center.degrees().to_vec();
        for f in &self.simple_factors {
            degrees.extend_from_slice(f.model.degrees());
        }
        let label: Vec<String> = std::iter::once(format!("T{}", self.center.rank()))
            .chain(self.simple_factors.iter().map(|f| f.model.label().to_string()))
            .collect();
        ExteriorModel::new(label.join("x"), degrees)
    }

    pub fn total_rank(&self) -> u64 {
        self.center.rank() as u64
            + self.simple_factors.iter().map(|f| u64::from(f.rank)).sum::<u64>()
    }
}

/// Parse a group description such as "T2xA1xG2": torus factors give the
/// central dimension, the rest are simple types.
pub fn parse_group_spec(spec: &str, mode: CatalogMode) -> Result<GroupModel> {
    let mut center_dim = 0usize;
    let mut factors = Vec::new();
    for token in spec.split('x') {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::Parse("empty factor in group description".into()));
        }
        if let Some(rest) = token.strip_prefix('T') {
            let d: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad torus factor {:?}", token)))?;
            center_dim += d;
        } else {
            factors.push(catalog_entry(LieType::parse(token)?, mode)?);
        }
    }
    GroupModel::new(center_dim, factors)
}

/// Predicted invariants of the group: graded dimensions, rank, alternating
/// sum, torsion of the central torus.
pub fn group_prediction(g: &GroupModel, k: u64) -> Result<Report> {
    let combined = g.combined_model()?;
    let poly = poincare_polynomial(&combined);
    let n = poly.len() - 1;
    let mut report = Report::new(format!("predicted invariants of {}", combined.label()));
    let palindromic = (0..poly.len()).all(|i| poly[i] == poly[n - i]);
    let coeffs: Vec<String> = poly.iter().map(|c| c.to_string()).collect();
    report.push(
        "graded dimensions are palindromic",
        palindromic,
        coeffs.join(","),
    );
    report.push(
        "dimension is the degree sum",
        combined.total_degree() == n as u64,
        format!("dimension {}", n),
    );
    let rank = g.total_rank();
    report.push(
        "dimension and rank have one parity",
        (n as u64) % 2 == rank % 2,
        format!("rank {}", rank),
    );
    let mut e = BigInt::zero();
    for (i, c) in poly.iter().enumerate() {
        if i % 2 == 0 {
            e += c;
        } else {
            e -= c;
        }
    }
    let expected_zero = rank > 0;
    report.push(
        "alternating sum vanishes for positive rank",
        if expected_zero { e.is_zero() } else { e.is_one() },
        format!("sum {}", e),
    );
    if k > 0 {
        let torsion = BigInt::from(k).pow(g.center.rank() as u32);
        report.push(
            format!("{}-torsion of the central torus", k),
            true,
            format!("order {}", torsion),
        );
    }
    report.push(
        "fundamental group free rank is the central dimension",
        g.pi1_center_rank == g.center.rank() as u64,
        format!("free rank {}", g.pi1_center_rank),
    );
    let mut power_ok = true;
    let mut inverse_trace = BigInt::zero();
    for l in -5..=5i64 {
        match power_map_lefschetz(&combined, l) {
            Ok(v) => {
                if l == -1 {
                    inverse_trace = v;
                }
            }
            Err(_) => power_ok = false,
        }
    }
    report.push(
        "power map traces match the closed form",
        power_ok,
        format!("exponents -5..5, inverse map trace {}", inverse_trace),
    );
    if combined.rank() > 0 {
        let mut primitive_ok = true;
        for i in 0..combined.rank() {
            for k in -10..=10i64 {
                let got = primitive_power_multiplier(&combined, i, k)?;
                if got != BigInt::from(k) {
                    primitive_ok = false;
                }
            }
        }
        let split = comultiplication_primitive(&combined, 0)?;
        report.push(
            "power maps multiply primitives by the exponent",
            primitive_ok,
            format!("checked through {}", split),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::homology::betti_numbers;

    #[test]
    fn polynomial_of_small_models() {
        let empty = ExteriorModel::new("point", vec![]).unwrap();
        assert_eq!(poincare_polynomial(&empty), vec![BigInt::one()]);
        let torus = ExteriorModel::new("T2", vec![1, 1]).unwrap();
        let p: Vec<i64> = poincare_polynomial(&torus)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(p, vec![1, 2, 1]);
        let g2 = ExteriorModel::new("G2", vec![3, 11]).unwrap();
        let p = poincare_polynomial(&g2);
        for (i, c) in p.iter().enumerate() {
            let expect = matches!(i, 0 | 3 | 11 | 14) as i64;
            assert_eq!(c, &BigInt::from(expect), "degree {}", i);
        }
    }

    #[test]
    fn polynomials_are_palindromic() {
        for entry in full_catalog(CatalogMode::SigmaConsistent, 8).unwrap() {
            let p = poincare_polynomial(&entry.model);
            let n = p.len() - 1;
            for i in 0..p.len() {
                assert_eq!(p[i], p[n - i], "{} degree {}", entry.model.label(), i);
            }
        }
    }

    #[test]
    fn power_map_traces() {
        let torus = ExteriorModel::new("T2", vec![1, 1]).unwrap();
        assert_eq!(power_map_lefschetz(&torus, 2).unwrap(), BigInt::one());
        let g2 = ExteriorModel::new("G2", vec![3, 11]).unwrap();
        assert_eq!(power_map_lefschetz(&g2, -1).unwrap(), BigInt::from(4));
        let circle = ExteriorModel::new("T1", vec![1]).unwrap();
        assert_eq!(power_map_lefschetz(&circle, 2).unwrap(), BigInt::from(-1));
        for entry in full_catalog(CatalogMode::SigmaConsistent, 6).unwrap() {
            for l in -5..=5i64 {
                let expect = (BigInt::one() - BigInt::from(l)).pow(entry.model.rank() as u32);
                assert_eq!(power_map_lefschetz(&entry.model, l).unwrap(), expect);
            }
        }
        let point = ExteriorModel::new("point", vec![]).unwrap();
        assert_eq!(power_map_lefschetz(&point, 1).unwrap(), BigInt::one());
        assert_eq!(power_map_lefschetz(&torus, 1).unwrap(), BigInt::zero());
    }

    #[test]
    fn primitives() {
        let g2 = ExteriorModel::new("G2", vec![3, 11]).unwrap();
        let expr = comultiplication_primitive(&g2, 0).unwrap();
        assert_eq!(expr.to_string(), "y_3 (x) 1 + 1 (x) y_3");
        assert!(matches!(
            comultiplication_primitive(&g2, 2),
            Err(Error::IndexOutOfRange(_))
        ));
        for k in -10..=10i64 {
            assert_eq!(
                primitive_power_multiplier(&g2, 1, k).unwrap(),
                BigInt::from(k)
            );
        }
    }

    #[test]
    fn catalog_lists() {
        let a2 = catalog_entry(LieType::A(2), CatalogMode::SigmaConsistent).unwrap();
        assert_eq!(a2.model.degrees(), &[3, 5]);
        assert_eq!(a2.dim, 8);
        assert!(a2.sum_matches_dim && a2.parity_matches);
        let f4 = catalog_entry(LieType::F4, CatalogMode::SigmaConsistent).unwrap();
        assert_eq!(f4.model.total_degree(), 52);
        let d4 = catalog_entry(LieType::D(4), CatalogMode::SigmaConsistent).unwrap();
        assert_eq!(d4.model.degrees(), &[3, 7, 7, 11]);
        assert_eq!(d4.dim, 28);
        assert!(d4.sum_matches_dim);
        let e8 = catalog_entry(LieType::E8, CatalogMode::SigmaConsistent).unwrap();
        assert_eq!(e8.model.rank(), 8);
        assert!(e8.sum_matches_dim);
    }

    #[test]
    fn catalog_consistency_up_to_rank_eight() {
        for entry in full_catalog(CatalogMode::SigmaConsistent, 8).unwrap() {
            assert!(
                entry.sum_matches_dim && entry.parity_matches,
                "{}",
                entry.model.label()
            );
        }
    }

    #[test]
    fn strict_lists_break_the_degree_sum() {
        let e8 = catalog_entry(LieType::E8, CatalogMode::StrictPaper).unwrap();
        assert_eq!(e8.model.rank(), 7);
        assert!(!e8.sum_matches_dim);
        assert_eq!(e8.model.total_degree(), 221);
        let d5 = catalog_entry(LieType::D(5), CatalogMode::StrictPaper).unwrap();
        assert!(!d5.sum_matches_dim);
        for entry in full_catalog(CatalogMode::StrictPaper, 8).unwrap() {
            match entry.lie_type {
                LieType::D(_) | LieType::E8 => assert!(!entry.sum_matches_dim),
                _ => assert!(entry.sum_matches_dim, "{}", entry.model.label()),
            }
        }
    }

    #[test]
    fn rank_bounds() {
        assert!(matches!(
            catalog_entry(LieType::B(1), CatalogMode::SigmaConsistent),
            Err(Error::RangeError(_))
        ));
        assert!(matches!(
            catalog_entry(LieType::C(2), CatalogMode::SigmaConsistent),
            Err(Error::RangeError(_))
        ));
        assert!(matches!(
            catalog_entry(LieType::D(3), CatalogMode::SigmaConsistent),
            Err(Error::RangeError(_))
        ));
        assert!(matches!(LieType::parse("E9"), Err(Error::RangeError(_))));
        assert!(matches!(LieType::parse("H4"), Err(Error::Parse(_))));
    }

    #[test]
    fn torsion_free_table() {
        assert!(torsion_free_mod(LieType::A(5), 2));
        assert!(torsion_free_mod(LieType::C(3), 2));
        assert!(!torsion_free_mod(LieType::G2, 2));
        assert!(torsion_free_mod(LieType::G2, 3));
        assert!(!torsion_free_mod(LieType::F4, 3));
        assert!(torsion_free_mod(LieType::F4, 5));
        assert!(!torsion_free_mod(LieType::E8, 5));
        assert!(torsion_free_mod(LieType::E8, 7));
    }

    #[test]
    fn torus_polynomials_match_simplicial_betti_numbers() {
        for n in 1..=3usize {
            let model = ExteriorModel::new(format!("T{}", n), vec![1; n]).unwrap();
            let poly = poincare_polynomial(&model);
            let k = SimplicialComplex::builtin(&format!("torus:{}", n)).unwrap();
            let betti = betti_numbers(&k, crate::homology::Coefficients::Q).unwrap();
            assert_eq!(poly.len(), betti.len(), "torus:{}", n);
            for (c, b) in poly.iter().zip(&betti) {
                assert_eq!(c, &BigInt::from(*b as u64), "torus:{}", n);
            }
        }
    }

    #[test]
    fn group_predictions() {
        let pure_center = parse_group_spec("T2", CatalogMode::SigmaConsistent).unwrap();
        let r = group_prediction(&pure_center, 5).unwrap();
        assert!(r.passed(), "{:?}", r.items);
        assert!(r.items.iter().any(|i| i.detail.contains("order 25")));
        let g2 = parse_group_spec("G2", CatalogMode::SigmaConsistent).unwrap();
        assert_eq!(g2.total_rank(), 2);
        let r = group_prediction(&g2, 2).unwrap();
        assert!(r.passed(), "{:?}", r.items);
        let mixed = parse_group_spec("T1xA1", CatalogMode::SigmaConsistent).unwrap();
        let m = mixed.combined_model().unwrap();
        assert_eq!(m.degrees(), &[1, 3]);
        assert_eq!(m.total_degree(), 4);
        let r = group_prediction(&mixed, 3).unwrap();
        assert!(r.passed(), "{:?}", r.items);
        assert!(parse_group_spec("T1xxA1", CatalogMode::SigmaConsistent).is_err());
    }
}
