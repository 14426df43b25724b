//! Chain complexes and homology of complexes and pairs: integral groups with
//! torsion and explicit generating cycles, field coefficients with dual
//! cocycle bases, induced maps, and the exactness and product verifications.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::complex::{SimplicialComplex, SimplicialMap, SimplicialPair};
use crate::error::Error;
use crate::exactlinalg::{
    bigint_to_u64, check_prime, f_from_int, f_kernel, f_rank, f_solve_multi, factor_u64,
    smith_normal_form, Field, IntMatrix, PrimeField, Rationals, SmithDecomposition, Span,
};
use crate::report::Report;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Z,
    Q,
    Fp(u64),
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Z => write!(f, "Z"),
            Coefficients::Q => write!(f, "Q"),
            Coefficients::Fp(p) => write!(f, "F{}", p),
        }
    }
}

impl std::str::FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" => Ok(Coefficients::Z),
            "Q" => Ok(Coefficients::Q),
            _ => {
                if let Some(rest) = s.strip_prefix('F') {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient spec {:?}", s)))?;
                    check_prime(p)?;
                    Ok(Coefficients::Fp(p))
                } else {
                    Err(Error::Parse(format!("bad coefficient spec {:?}", s)))
                }
            }
        }
    }
}

/// Boundary matrices of a complex or a pair, over the integers.
/// `basis[q]` names the ambient q-simplices that index the chain group, so
/// relative complexes can be mapped back into their ambient complex.
pub struct ChainComplexRep {
    pub reduced: bool,
    pub(crate) ranks: Vec<usize>,
    pub(crate) boundaries: Vec<IntMatrix>,
    pub basis: Vec<Vec<usize>>,
}

impl ChainComplexRep {
    pub fn top_degree(&self) -> i64 {
        self.ranks.len() as i64 - 1
    }

    pub fn rank(&self, q: usize) -> usize {
        self.ranks.get(q).copied().unwrap_or(0)
    }

    /// The boundary map out of degree q; zero-shaped once q exceeds the top.
    pub fn boundary(&self, q: usize) -> IntMatrix {
        if q < self.boundaries.len() {
            self.boundaries[q].clone()
        } else {
            let rows = if q == 0 { 0 } else { self.rank(q - 1) };
            IntMatrix::zero(rows, self.rank(q))
        }
    }
}

/// Absolute chain complex; with `reduced` the augmentation becomes the
/// boundary out of degree zero.
pub fn chain_complex(k: &SimplicialComplex, reduced: bool) -> ChainComplexRep {
    if k.dim() < 0 {
        return ChainComplexRep {
            reduced,
            ranks: Vec::new(),
            boundaries: Vec::new(),
            basis: Vec::new(),
        };
    }
    let top = k.dim() as usize;
    let ranks: Vec<usize> = k.f_vector();
    let mut boundaries = Vec::with_capacity(top + 1);
    let mut d0 = IntMatrix::zero(if reduced { 1 } else { 0 }, ranks[0]);
    if reduced {
        for j in 0..ranks[0] {
            d0.set(0, j, BigInt::one());
        }
    }
    boundaries.push(d0);
    for q in 1..=top {
        let mut m = IntMatrix::zero(ranks[q - 1], ranks[q]);
        for (j, s) in k.simplices(q).iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let row = k.simplex_index(q - 1, &face).expect("closed under faces");
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m.set(row, j, sign);
            }
        }
        boundaries.push(m);
    }
    let basis = (0..=top).map(|q| (0..ranks[q]).collect()).collect();
    ChainComplexRep { reduced, ranks, boundaries, basis }
}

/// Quotient chain complex of a pair: the simplices of the ambient complex
/// outside the subcomplex, with boundary terms in the subcomplex dropped.
pub fn relative_chain_complex(pair: &SimplicialPair) -> ChainComplexRep {
    let k = &pair.ambient;
    let a = &pair.sub;
    if k.dim() < 0 {
        return ChainComplexRep {
            reduced: false,
            ranks: Vec::new(),
            boundaries: Vec::new(),
            basis: Vec::new(),
        };
    }
    let top = k.dim() as usize;
    let mut basis: Vec<Vec<usize>> = Vec::with_capacity(top + 1);
    let mut pos: Vec<Vec<Option<usize>>> = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let mut b = Vec::new();
        let mut p = vec![None; k.simplices(q).len()];
        for (i, s) in k.simplices(q).iter().enumerate() {
            if !a.has_tokens(&k.tokens_of(s)) {
                p[i] = Some(b.len());
                b.push(i);
            }
        }
        basis.push(b);
        pos.push(p);
    }
    let ranks: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(IntMatrix::zero(0, ranks[0]));
    for q in 1..=top {
        let mut m = IntMatrix::zero(ranks[q - 1], ranks[q]);
        for (j, &ki) in basis[q].iter().enumerate() {
            let s = &k.simplices(q)[ki];
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let fk = k.simplex_index(q - 1, &face).expect("closed under faces");
                if let Some(row) = pos[q - 1][fk] {
                    let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    m.set(row, j, sign);
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplexRep { reduced: false, ranks, boundaries, basis }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn trivial(degree: usize) -> Self {
        HomologyGroup { degree, betti: 0, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Multiset of prime power orders of the torsion part, sorted.
    pub fn prime_power_torsion(&self) -> Result<Vec<(u64, u32)>> {
        let mut out = Vec::new();
        for t in &self.torsion {
            for pe in factor_u64(bigint_to_u64(t)?) {
                out.push(pe);
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{}", b)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

struct DegreeData {
    chain_rank: usize,
    kernel: IntMatrix,
    kernel_snf: SmithDecomposition,
    coord_snf: SmithDecomposition,
    k_rank: usize,
    r: usize,
}

impl DegreeData {
    /// Coordinates of a chain in the cycle basis; errors if not a cycle.
    fn kernel_coords(&self, chain: &[BigInt]) -> Result<Vec<BigInt>> {
        assert_eq!(chain.len(), self.chain_rank);
        let ub = self.kernel_snf.u.mat_vec(chain);
        let mut y = vec![BigInt::zero(); self.k_rank];
        for (i, v) in ub.iter().enumerate() {
            if i < self.k_rank {
                let d = self.kernel_snf.d.get(i, i);
                if d.is_zero() {
                    if !v.is_zero() {
                        return Err(Error::InternalMismatch("chain is not a cycle".into()));
                    }
                    continue;
                }
                let (q, rem) = v.div_rem(&d);
                if !rem.is_zero() {
                    return Err(Error::InternalMismatch("chain is not a cycle".into()));
                }
                y[i] = q;
            } else if !v.is_zero() {
                return Err(Error::InternalMismatch("chain is not a cycle".into()));
            }
        }
        Ok(self.kernel_snf.v.mat_vec(&y))
    }

    /// Homology coordinates of a cycle: torsion entries reduced modulo their
    /// orders (only orders > 1 kept), then the free entries.
    fn class_coords(&self, chain: &[BigInt]) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
        let x = self.kernel_coords(chain)?;
        let h = self.coord_snf.u.mat_vec(&x);
        let mut torsion = Vec::new();
        for i in 0..self.r {
            let d = &self.coord_snf.invariant_factors[i];
            if *d > BigInt::one() {
                torsion.push(h[i].mod_floor(d));
            }
        }
        Ok((torsion, h[self.r..].to_vec()))
    }

    fn generator_chain(&self, i: usize) -> Vec<BigInt> {
        let col = self.coord_snf.u_inv.column(i);
        self.kernel.mat_vec(&col)
    }
}

pub struct IntegralHomology {
    pub groups: Vec<HomologyGroup>,
    data: Vec<DegreeData>,
}

/// Integral homology of the chain complex, with generators.
pub fn integral_homology(cx: &ChainComplexRep) -> IntegralHomology {
    let top = cx.top_degree();
    let mut groups = Vec::new();
    let mut data = Vec::new();
    if top < 0 {
        return IntegralHomology { groups, data };
    }
    for q in 0..=top as usize {
        let a = cx.boundary(q);
        let b = if (q as i64) < top { cx.boundary(q + 1) } else { IntMatrix::zero(cx.rank(q), 0) };
        let n = cx.rank(q);
        let a_snf = smith_normal_form(&a);
        let a_rank = a_snf.rank();
        let mut kernel = IntMatrix::zero(n, n - a_rank);
        for (jj, j) in (a_rank..n).enumerate() {
            for (i, v) in a_snf.v.column(j).into_iter().enumerate() {
                if !v.is_zero() {
                    kernel.set(i, jj, v);
                }
            }
        }
        let k_rank = n - a_rank;
        let kernel_snf = smith_normal_form(&kernel);
        let mut dd = DegreeData {
            chain_rank: n,
            kernel,
            kernel_snf,
            coord_snf: smith_normal_form(&IntMatrix::zero(k_rank, 0)),
            k_rank,
            r: 0,
        };
        let mut coords = IntMatrix::zero(k_rank, b.cols());
        for j in 0..b.cols() {
            let x = dd
                .kernel_coords(&b.column(j))
                .expect("boundaries are cycles");
            for (i, v) in x.into_iter().enumerate() {
                if !v.is_zero() {
                    coords.set(i, j, v);
                }
            }
        }
        let coord_snf = smith_normal_form(&coords);
        let r = coord_snf.rank();
        let torsion: Vec<BigInt> = coord_snf.invariant_factors[..r]
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect();
        groups.push(HomologyGroup { degree: q, betti: k_rank - r, torsion });
        dd.coord_snf = coord_snf;
        dd.r = r;
        data.push(dd);
    }
    IntegralHomology { groups, data }
}

impl IntegralHomology {
    pub fn group(&self, q: usize) -> HomologyGroup {
        self.groups.get(q).cloned().unwrap_or_else(|| HomologyGroup::trivial(q))
    }

    pub fn top_degree(&self) -> i64 {
        self.groups.len() as i64 - 1
    }

    pub fn free_rank(&self, q: usize) -> usize {
        self.groups.get(q).map_or(0, |g| g.betti)
    }

    /// Chain vectors generating the free part, one per Betti number.
    pub fn free_reps(&self, q: usize) -> Vec<Vec<BigInt>> {
        let Some(dd) = self.data.get(q) else { return Vec::new() };
        (dd.r..dd.k_rank).map(|i| dd.generator_chain(i)).collect()
    }

    /// (order, chain vector) for each torsion summand.
    pub fn torsion_reps(&self, q: usize) -> Vec<(BigInt, Vec<BigInt>)> {
        let Some(dd) = self.data.get(q) else { return Vec::new() };
        (0..dd.r)
            .filter(|&i| dd.coord_snf.invariant_factors[i] > BigInt::one())
            .map(|i| (dd.coord_snf.invariant_factors[i].clone(), dd.generator_chain(i)))
            .collect()
    }

    pub fn class_free_coords(&self, q: usize, chain: &[BigInt]) -> Result<Vec<BigInt>> {
        match self.data.get(q) {
            Some(dd) => Ok(dd.class_coords(chain)?.1),
            None => Ok(Vec::new()),
        }
    }

    pub fn class_torsion_coords(&self, q: usize, chain: &[BigInt]) -> Result<Vec<BigInt>> {
        match self.data.get(q) {
            Some(dd) => Ok(dd.class_coords(chain)?.0),
            None => Ok(Vec::new()),
        }
    }

    pub fn is_cycle(&self, q: usize, chain: &[BigInt]) -> bool {
        self.data.get(q).map_or(false, |dd| dd.kernel_coords(chain).is_ok())
    }
}

/// Field-coefficient homology with a chosen cycle basis per degree and the
/// dual cocycle basis pairing to it by the identity matrix.
pub struct FieldHomology<F: Field> {
    pub field: F,
    pub dims: Vec<usize>,
    chain_ranks: Vec<usize>,
    cycles: Vec<Vec<Vec<F::E>>>,
    cocycles: Vec<Vec<Vec<F::E>>>,
}

pub fn field_homology<F: Field>(field: &F, cx: &ChainComplexRep) -> Result<FieldHomology<F>> {
    let top = cx.top_degree();
    let mut dims = Vec::new();
    let mut cycles = Vec::new();
    let mut cocycles = Vec::new();
    let mut chain_ranks = Vec::new();
    if top < 0 {
        return Ok(FieldHomology {
            field: field.clone(),
            dims,
            chain_ranks,
            cycles,
            cocycles,
        });
    }
    for q in 0..=top as usize {
        let n = cx.rank(q);
        chain_ranks.push(n);
        let a = cx.boundary(q);
        let kernel: Vec<Vec<F::E>> = if a.rows() == 0 {
            (0..n)
                .map(|i| {
                    let mut v = vec![field.zero(); n];
                    v[i] = field.one();
                    v
                })
                .collect()
        } else {
            f_kernel(field, &f_from_int(field, &a))
        };
        let b = if (q as i64) < top { cx.boundary(q + 1) } else { IntMatrix::zero(n, 0) };
        let bf = f_from_int(field, &b);
        let mut span = Span::new(field, n);
        for j in 0..b.cols() {
            let col: Vec<F::E> = (0..n).map(|i| bf[i][j].clone()).collect();
            span.insert(&col);
        }
        let mut reps: Vec<Vec<F::E>> = Vec::new();
        for z in &kernel {
            if span.insert(z) {
                reps.push(z.clone());
            }
        }
        // dual cocycles: kill the coboundaries, pair to the chosen cycles
        let kdim = reps.len();
        let mut system: Vec<Vec<F::E>> = Vec::with_capacity(b.cols() + kdim);
        for j in 0..b.cols() {
            system.push((0..n).map(|i| bf[i][j].clone()).collect());
        }
        for z in &reps {
            system.push(z.clone());
        }
        let mut rhs = Vec::with_capacity(kdim);
        for i in 0..kdim {
            let mut e = vec![field.zero(); b.cols() + kdim];
            e[b.cols() + i] = field.one();
            rhs.push(e);
        }
        let duals = if kdim == 0 {
            Vec::new()
        } else {
            f_solve_multi(field, &system, &rhs)
                .ok_or_else(|| Error::InternalMismatch("dual cocycle solve failed".into()))?
        };
        dims.push(kdim);
        cycles.push(reps);
        cocycles.push(duals);
    }
    Ok(FieldHomology { field: field.clone(), dims, chain_ranks, cycles, cocycles })
}

impl<F: Field> FieldHomology<F> {
    pub fn betti(&self, q: usize) -> usize {
        self.dims.get(q).copied().unwrap_or(0)
    }

    pub fn chain_rank(&self, q: usize) -> usize {
        self.chain_ranks.get(q).copied().unwrap_or(0)
    }

    pub fn cycle_reps(&self, q: usize) -> &[Vec<F::E>] {
        self.cycles.get(q).map_or(&[], |v| v.as_slice())
    }

    pub fn cocycle_reps(&self, q: usize) -> &[Vec<F::E>] {
        self.cocycles.get(q).map_or(&[], |v| v.as_slice())
    }

    /// Homology coordinates of a cycle: pairings with the dual cocycles.
    pub fn class_coords(&self, q: usize, chain: &[F::E]) -> Vec<F::E> {
        let f = &self.field;
        self.cocycle_reps(q)
            .iter()
            .map(|phi| {
                let mut acc = f.zero();
                for (a, b) in phi.iter().zip(chain) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Cohomology coordinates of a cocycle in the basis dual to the cycles:
    /// evaluations on the cycle representatives.
    pub fn cocycle_class_coords(&self, q: usize, cochain: &[F::E]) -> Vec<F::E> {
        let f = &self.field;
        self.cycle_reps(q)
            .iter()
            .map(|z| {
                let mut acc = f.zero();
                for (a, b) in cochain.iter().zip(z) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Signed chain map of a simplicial map in degree q, columns over source
/// simplices. Simplices with collapsing vertices map to zero.
pub fn chain_map_matrix(f: &SimplicialMap, q: usize) -> IntMatrix {
    let src = f.source();
    let dst = f.target();
    let mut m = IntMatrix::zero(dst.simplices(q).len(), src.simplices(q).len());
    for (j, s) in src.simplices(q).iter().enumerate() {
        let mut img: Vec<u32> = s.iter().map(|&v| f.image_of(v)).collect();
        let Some(sign) = sort_sign(&mut img) else { continue };
        let i = dst
            .simplex_index(q, &img)
            .expect("simplicial image spans a simplex");
        m.set(i, j, BigInt::from(sign));
    }
    m
}

/// Sorts the tuple; returns the permutation sign, or None on duplicates.
fn sort_sign(v: &mut [u32]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] >= v[j] {
            if v[j - 1] == v[j] {
                return None;
            }
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some(sign)
}

/// Matrix of the induced map on field homology in degree q, in the chosen
/// bases of source and target.
pub fn induced_map_field<F: Field>(
    field: &F,
    f: &SimplicialMap,
    q: usize,
    src: &FieldHomology<F>,
    dst: &FieldHomology<F>,
) -> Vec<Vec<F::E>> {
    let cm = f_from_int(field, &chain_map_matrix(f, q));
    let cols: Vec<Vec<F::E>> = src
        .cycle_reps(q)
        .iter()
        .map(|z| {
            let w: Vec<F::E> = cm
                .iter()
                .map(|row| {
                    let mut acc = field.zero();
                    for (a, b) in row.iter().zip(z) {
                        if !field.is_zero(a) && !field.is_zero(b) {
                            acc = field.add(&acc, &field.mul(a, b));
                        }
                    }
                    acc
                })
                .collect();
            dst.class_coords(q, &w)
        })
        .collect();
    let rows = dst.betti(q);
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// Matrix of the induced map on the free part of integral homology.
pub fn induced_map_free(
    f: &SimplicialMap,
    q: usize,
    src: &IntegralHomology,
    dst: &IntegralHomology,
) -> Result<Vec<Vec<BigInt>>> {
    let cm = chain_map_matrix(f, q);
    let mut cols = Vec::new();
    for z in src.free_reps(q) {
        let w = cm.mat_vec(&z);
        cols.push(dst.class_free_coords(q, &w)?);
    }
    let rows = dst.free_rank(q);
    Ok((0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
}

/// Homology groups in the requested coefficients. Field coefficients give
/// torsion-free groups whose Betti entry is the dimension.
pub fn homology_groups(
    k: &SimplicialComplex,
    coeff: Coefficients,
    reduced: bool,
) -> Result<Vec<HomologyGroup>> {
    let cx = chain_complex(k, reduced);
    match coeff {
        Coefficients::Z => Ok(integral_homology(&cx).groups),
        Coefficients::Q => {
            let h = field_homology(&Rationals, &cx)?;
            Ok(h.dims
                .iter()
                .enumerate()
                .map(|(q, &b)| HomologyGroup { degree: q, betti: b, torsion: Vec::new() })
                .collect())
        }
        Coefficients::Fp(p) => {
            let h = field_homology(&PrimeField::new(p)?, &cx)?;
            Ok(h.dims
                .iter()
                .enumerate()
                .map(|(q, &b)| HomologyGroup { degree: q, betti: b, torsion: Vec::new() })
                .collect())
        }
    }
}

pub fn betti_numbers(k: &SimplicialComplex, coeff: Coefficients) -> Result<Vec<usize>> {
    Ok(homology_groups(k, coeff, false)?.iter().map(|g| g.betti).collect())
}

/// The alternating sum computed three independent ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub from_f_vector: i64,
    pub from_betti: i64,
    pub from_traces: i64,
}

impl EulerReport {
    pub fn agree(&self) -> bool {
        self.from_f_vector == self.from_betti && self.from_betti == self.from_traces
    }

    pub fn value(&self) -> Result<i64> {
        if self.agree() {
            Ok(self.from_f_vector)
        } else {
            Err(Error::InternalMismatch(format!(
                "alternating sums disagree: {} vs {} vs {}",
                self.from_f_vector, self.from_betti, self.from_traces
            )))
        }
    }
}

pub fn euler_three_ways(k: &SimplicialComplex) -> Result<EulerReport> {
    let from_f_vector = k.euler_characteristic_f();
    let cx = chain_complex(k, false);
    let h = field_homology(&Rationals, &cx)?;
    let mut from_betti = 0i64;
    for (q, &b) in h.dims.iter().enumerate() {
        let s = if q % 2 == 0 { 1 } else { -1 };
        from_betti += s * b as i64;
    }
    let id = SimplicialMap::identity(k);
    let mut from_traces = 0i64;
    for q in 0..h.dims.len() {
        let m = induced_map_field(&Rationals, &id, q, &h, &h);
        let mut tr = num_rational::BigRational::zero();
        for (i, row) in m.iter().enumerate() {
            tr += &row[i];
        }
        if !tr.is_integer() {
            return Err(Error::InternalMismatch("non-integral trace".into()));
        }
        let t = tr
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::RangeError("trace out of range".into()))?;
        from_traces += if q % 2 == 0 { t } else { -t };
    }
    Ok(EulerReport { from_f_vector, from_betti, from_traces })
}

// ---------------------------------------------------------------------------
// exactness and product verifications
// ---------------------------------------------------------------------------

fn rank_of<F: Field>(field: &F, m: &[Vec<F::E>]) -> usize {
    f_rank(field, m)
}

/// Exactness at a space of dimension `dim` with incoming `f`, outgoing `g`:
/// the composite vanishes and the ranks fill the space.
fn exact_at<F: Field>(field: &F, f: &[Vec<F::E>], g: &[Vec<F::E>], dim: usize) -> bool {
    for grow in g {
        // (g f) column j = sum_l g[.][l] f[l][j]
        for j in 0..f.first().map_or(0, |r| r.len()) {
            let mut acc = field.zero();
            for (l, fl) in f.iter().enumerate() {
                if !field.is_zero(&fl[j]) && !field.is_zero(&grow[l]) {
                    acc = field.add(&acc, &field.mul(&grow[l], &fl[j]));
                }
            }
            if !field.is_zero(&acc) {
                return false;
            }
        }
    }
    rank_of(field, f) + rank_of(field, g) == dim
}

/// Index of each subcomplex q-simplex inside the ambient complex.
fn inclusion_indices(sub: &SimplicialComplex, ambient: &SimplicialComplex, q: usize) -> Vec<usize> {
    sub.simplices(q)
        .iter()
        .map(|s| {
            let toks = sub.tokens_of(s);
            let ids: Vec<u32> = toks
                .iter()
                .map(|t| ambient.vertex_id(t).expect("subcomplex vertex"))
                .collect();
            let mut ids = ids;
            ids.sort_unstable();
            ambient.simplex_index(q, &ids).expect("subcomplex simplex")
        })
        .collect()
}

/// Push a subcomplex chain into ambient coordinates.
fn scatter<F: Field>(
    field: &F,
    chain: &[F::E],
    indices: &[usize],
    ambient_rank: usize,
) -> Vec<F::E> {
    let mut out = vec![field.zero(); ambient_rank];
    for (j, v) in chain.iter().enumerate() {
        out[indices[j]] = v.clone();
    }
    out
}

/// Restrict an ambient chain to subcomplex coordinates; errors if it is
/// supported outside the subcomplex.
fn gather<F: Field>(
    field: &F,
    chain: &[F::E],
    indices: &[usize],
) -> Result<Vec<F::E>> {
    let mut out = vec![field.zero(); indices.len()];
    let mut hit = vec![false; chain.len()];
    for (j, &i) in indices.iter().enumerate() {
        out[j] = chain[i].clone();
        hit[i] = true;
    }
    for (i, v) in chain.iter().enumerate() {
        if !hit[i] && !field.is_zero(v) {
            return Err(Error::InternalMismatch("chain leaks outside subcomplex".into()));
        }
    }
    Ok(out)
}

fn apply_int_matrix<F: Field>(field: &F, m: &IntMatrix, v: &[F::E]) -> Vec<F::E> {
    let mut out = vec![field.zero(); m.rows()];
    for (r, c, val) in m.iter() {
        if !field.is_zero(&v[c]) {
            let f = field.from_bigint(val);
            out[r] = field.add(&out[r], &field.mul(&f, &v[c]));
        }
    }
    out
}

/// Long exact homology sequence of a pair, checked over the rationals and
/// over the prime fields F2, F3, F5.
pub fn verify_les(pair: &SimplicialPair) -> Result<Report> {
    let mut report = Report::new("long exact sequence of the pair");
    let spots = les_over_field(&Rationals, pair)?;
    push_exactness_item(&mut report, "Q", spots);
    for p in [2u64, 3, 5] {
        let field = PrimeField::new(p)?;
        let spots = les_over_field(&field, pair)?;
        push_exactness_item(&mut report, &format!("F{}", p), spots);
    }
    Ok(report)
}

fn push_exactness_item(report: &mut Report, field: &str, spots: Vec<(String, bool)>) {
    let failed: Vec<&str> =
        spots.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    let ok = failed.is_empty();
    let detail = if ok {
        format!("{} spots exact", spots.len())
    } else {
        format!("failed at {}", failed.join(", "))
    };
    report.push(&format!("exact over {}", field), ok, &detail);
}

fn les_over_field<F: Field>(
    field: &F,
    pair: &SimplicialPair,
) -> Result<Vec<(String, bool)>> {
    let k = &pair.ambient;
    let a = &pair.sub;
    let cx_k = chain_complex(k, false);
    let cx_a = chain_complex(a, false);
    let cx_rel = relative_chain_complex(pair);
    let hk = field_homology(field, &cx_k)?;
    let ha = field_homology(field, &cx_a)?;
    let hrel = field_homology(field, &cx_rel)?;
    let top = k.dim().max(0) as usize;

    let mut incl = Vec::new();
    for q in 0..=top {
        incl.push(inclusion_indices(a, k, q));
    }

    // homology-level matrices per degree
    let mut i_star: Vec<Vec<Vec<F::E>>> = Vec::new();
    let mut j_star: Vec<Vec<Vec<F::E>>> = Vec::new();
    let mut conn: Vec<Vec<Vec<F::E>>> = Vec::new(); // index q: H_q(rel) -> H_{q-1}(A)
    for q in 0..=top {
        let cols_i: Vec<Vec<F::E>> = ha
            .cycle_reps(q)
            .iter()
            .map(|z| hk.class_coords(q, &scatter(field, z, &incl[q], cx_k.rank(q))))
            .collect();
        i_star.push(columns_to_matrix(field, hk.betti(q), cols_i));

        let cols_j: Vec<Vec<F::E>> = hk
            .cycle_reps(q)
            .iter()
            .map(|z| {
                let rel: Vec<F::E> =
                    cx_rel.basis[q].iter().map(|&ki| z[ki].clone()).collect();
                hrel.class_coords(q, &rel)
            })
            .collect();
        j_star.push(columns_to_matrix(field, hrel.betti(q), cols_j));

        let cols_c: Vec<Vec<F::E>> = if q == 0 {
            Vec::new()
        } else {
            hrel.cycle_reps(q)
                .iter()
                .map(|z| {
                    let lifted = scatter_by(field, z, &cx_rel.basis[q], cx_k.rank(q));
                    let bd = apply_int_matrix(field, &cx_k.boundary(q), &lifted);
                    let restricted = gather(field, &bd, &incl[q - 1])?;
                    Ok(ha.class_coords(q - 1, &restricted))
                })
                .collect::<Result<Vec<_>>>()?
        };
        let rows = if q == 0 { 0 } else { ha.betti(q - 1) };
        conn.push(columns_to_matrix(field, rows, cols_c));
    }

    // walk the sequence, checking exactness at every space
    let zero: Vec<Vec<F::E>> = Vec::new();
    let mut spots = Vec::new();
    for q in (0..=top).rev() {
        let incoming_a: &Vec<Vec<F::E>> = if q + 1 <= top { &conn[q + 1] } else { &zero };
        spots.push((
            format!("H_{}(A)", q),
            exact_at(field, incoming_a, &i_star[q], ha.betti(q)),
        ));
        spots.push((
            format!("H_{}(X)", q),
            exact_at(field, &i_star[q], &j_star[q], hk.betti(q)),
        ));
        let outgoing: &Vec<Vec<F::E>> = if q > 0 { &conn[q] } else { &zero };
        spots.push((
            format!("H_{}(X,A)", q),
            exact_at(field, &j_star[q], outgoing, hrel.betti(q)),
        ));
    }
    Ok(spots)
}

fn scatter_by<F: Field>(
    field: &F,
    chain: &[F::E],
    basis: &[usize],
    ambient_rank: usize,
) -> Vec<F::E> {
    let mut out = vec![field.zero(); ambient_rank];
    for (j, v) in chain.iter().enumerate() {
        out[basis[j]] = v.clone();
    }
    out
}

fn columns_to_matrix<F: Field>(
    field: &F,
    rows: usize,
    cols: Vec<Vec<F::E>>,
) -> Vec<Vec<F::E>> {
    (0..rows)
        .map(|i| {
            cols.iter()
                .map(|c| c.get(i).cloned().unwrap_or_else(|| field.zero()))
                .collect()
        })
        .collect()
}

/// The union/intersection exact sequence for a cover by two subcomplexes.
pub fn verify_mayer_vietoris(
    k: &SimplicialComplex,
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
) -> Result<Report> {
    if !k1.is_subcomplex_of(k) || !k2.is_subcomplex_of(k) {
        return Err(Error::BadCover("parts are not subcomplexes".into()));
    }
    // the parts must cover: every simplex lies in one or the other
    for d in 0..=k.dim().max(0) as usize {
        for s in k.simplices(d) {
            let toks = k.tokens_of(s);
            if !k1.has_tokens(&toks) && !k2.has_tokens(&toks) {
                return Err(Error::BadCover(format!(
                    "simplex {{{}}} in neither part",
                    toks.join(",")
                )));
            }
        }
    }
    // the intersection subcomplex
    let mut meet_sims: Vec<Vec<String>> = Vec::new();
    for d in 0..=k.dim().max(0) as usize {
        for s in k.simplices(d) {
            let toks = k.tokens_of(s);
            if k1.has_tokens(&toks) && k2.has_tokens(&toks) {
                meet_sims.push(toks);
            }
        }
    }
    let meet = SimplicialComplex::build_complex(&meet_sims)?;

    let mut report = Report::new("union exact sequence");
    let spots = mv_over_field(&Rationals, k, k1, k2, &meet)?;
    push_exactness_item(&mut report, "Q", spots);
    for p in [2u64, 3, 5] {
        let field = PrimeField::new(p)?;
        let spots = mv_over_field(&field, k, k1, k2, &meet)?;
        push_exactness_item(&mut report, &format!("F{}", p), spots);
    }
    Ok(report)
}

fn mv_over_field<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
    meet: &SimplicialComplex,
) -> Result<Vec<(String, bool)>> {
    let cx_k = chain_complex(k, false);
    let hk = field_homology(field, &cx_k)?;
    let h1 = field_homology(field, &chain_complex(k1, false))?;
    let h2 = field_homology(field, &chain_complex(k2, false))?;
    let hm = field_homology(field, &chain_complex(meet, false))?;
    let top = k.dim().max(0) as usize;

    let mut spots = Vec::new();
    let mut alpha: Vec<Vec<Vec<F::E>>> = Vec::new();
    let mut beta: Vec<Vec<Vec<F::E>>> = Vec::new();
    let mut conn: Vec<Vec<Vec<F::E>>> = Vec::new();
    for q in 0..=top {
        let m_in_1 = inclusion_indices(meet, k1, q);
        let m_in_2 = inclusion_indices(meet, k2, q);
        let i1 = inclusion_indices(k1, k, q);
        let i2 = inclusion_indices(k2, k, q);

        // H_q(A) -> H_q(K1) + H_q(K2), z -> (z, z)
        let cols_a: Vec<Vec<F::E>> = hm
            .cycle_reps(q)
            .iter()
            .map(|z| {
                let mut top_part =
                    h1.class_coords(q, &scatter(field, z, &m_in_1, h1.chain_rank(q)));
                let bot =
                    h2.class_coords(q, &scatter(field, z, &m_in_2, h2.chain_rank(q)));
                top_part.extend(bot);
                top_part
            })
            .collect();
        alpha.push(columns_to_matrix(field, h1.betti(q) + h2.betti(q), cols_a));

        // H_q(K1) + H_q(K2) -> H_q(K), (u, v) -> u - v
        let mut cols_b: Vec<Vec<F::E>> = h1
            .cycle_reps(q)
            .iter()
            .map(|z| hk.class_coords(q, &scatter(field, z, &i1, cx_k.rank(q))))
            .collect();
        for z in h2.cycle_reps(q) {
            let coords = hk.class_coords(q, &scatter(field, z, &i2, cx_k.rank(q)));
            cols_b.push(coords.iter().map(|v| field.neg(v)).collect());
        }
        beta.push(columns_to_matrix(field, hk.betti(q), cols_b));

        // connecting map: split a cycle, take the boundary of the first part
        let cols_c: Vec<Vec<F::E>> = if q == 0 {
            Vec::new()
        } else {
            let n = cx_k.rank(q);
            let mut split_cols: Vec<Vec<F::E>> = Vec::new();
            for &amb in &i1 {
                let mut col = vec![field.zero(); n];
                col[amb] = field.one();
                split_cols.push(col);
            }
            let n1 = i1.len();
            for &amb in &i2 {
                let mut col = vec![field.zero(); n];
                col[amb] = field.one();
                split_cols.push(col);
            }
            let system = columns_to_matrix(field, n, split_cols);
            let rhs: Vec<Vec<F::E>> = hk.cycle_reps(q).to_vec();
            let sols = if rhs.is_empty() {
                Vec::new()
            } else {
                f_solve_multi(field, &system, &rhs)
                    .ok_or_else(|| Error::InternalMismatch("cover split failed".into()))?
            };
            let bd1 = chain_complex(k1, false).boundary(q);
            let m_in_1_low = inclusion_indices(meet, k1, q - 1);
            sols.iter()
                .map(|x| {
                    let c1: Vec<F::E> = x[..n1].to_vec();
                    let b = apply_int_matrix(field, &bd1, &c1);
                    let restricted = gather(field, &b, &m_in_1_low)?;
                    Ok(hm.class_coords(q - 1, &restricted))
                })
                .collect::<Result<Vec<_>>>()?
        };
        let rows = if q == 0 { 0 } else { hm.betti(q - 1) };
        conn.push(columns_to_matrix(field, rows, cols_c));
    }

    let zero: Vec<Vec<F::E>> = Vec::new();
    for q in (0..=top).rev() {
        let incoming: &Vec<Vec<F::E>> = if q + 1 <= top { &conn[q + 1] } else { &zero };
        spots.push((
            format!("H_{}(A)", q),
            exact_at(field, incoming, &alpha[q], hm.betti(q)),
        ));
        spots.push((
            format!("H_{}(K1)+H_{}(K2)", q, q),
            exact_at(field, &alpha[q], &beta[q], h1.betti(q) + h2.betti(q)),
        ));
        let outgoing: &Vec<Vec<F::E>> = if q > 0 { &conn[q] } else { &zero };
        spots.push((
            format!("H_{}(X)", q),
            exact_at(field, &beta[q], outgoing, hk.betti(q)),
        ));
    }
    Ok(spots)
}

/// Field homology dimensions predicted from integral homology: the free rank,
/// plus torsion killed by p in this degree and the one below.
pub fn verify_uct(k: &SimplicialComplex, primes: &[u64]) -> Result<Report> {
    let mut report = Report::new("universal coefficients, field side");
    let cx = chain_complex(k, false);
    let ih = integral_homology(&cx);
    let top = cx.top_degree();
    for &p in primes {
        let field = PrimeField::new(p)?;
        let fh = field_homology(&field, &cx)?;
        let mut ok = true;
        let mut details = Vec::new();
        for q in 0..=top.max(0) as usize {
            let g = ih.group(q);
            let pb = BigInt::from(p);
            let here = g.torsion.iter().filter(|t| t.is_multiple_of(&pb)).count();
            let below = if q == 0 {
                0
            } else {
                ih.group(q - 1).torsion.iter().filter(|t| t.is_multiple_of(&pb)).count()
            };
            let predicted = g.betti + here + below;
            let got = fh.betti(q);
            if predicted != got {
                ok = false;
            }
            details.push(format!("q={}: {}={}", q, predicted, got));
        }
        report.push(
            &format!("dims over F{} match prediction", p),
            ok,
            &details.join(", "),
        );
    }
    Ok(report)
}

/// Homology of a product against the graded formula from the factors, over
/// fields (dimension convolution) and integrally (with the torsion pairing
/// terms).
pub fn verify_kunneth(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<Report> {
    let mut report = Report::new("product homology");
    let p = k.product(l);
    let cx_p = chain_complex(&p, false);
    let top = cx_p.top_degree().max(0) as usize;

    for coeff in [Coefficients::Q, Coefficients::Fp(2), Coefficients::Fp(3), Coefficients::Fp(5)]
    {
        let bk = betti_numbers(k, coeff)?;
        let bl = betti_numbers(l, coeff)?;
        let bp = betti_numbers(&p, coeff)?;
        let mut ok = true;
        for n in 0..=top {
            let mut expect = 0usize;
            for i in 0..=n {
                let a = bk.get(i).copied().unwrap_or(0);
                let b = bl.get(n - i).copied().unwrap_or(0);
                expect += a * b;
            }
            if expect != bp.get(n).copied().unwrap_or(0) {
                ok = false;
            }
        }
        report.push(
            &format!("dimension convolution over {}", coeff),
            ok,
            &format!("factors {:?} x {:?} give {:?}", bk, bl, bp),
        );
    }

    let hk = integral_homology(&chain_complex(k, false));
    let hl = integral_homology(&chain_complex(l, false));
    let hp = integral_homology(&cx_p);
    let mut ok = true;
    let mut details = Vec::new();
    for n in 0..=top {
        let mut betti = 0usize;
        let mut torsion: Vec<(u64, u32)> = Vec::new();
        for i in 0..=n {
            let gi = hk.group(i);
            let gj = hl.group(n - i);
            betti += gi.betti * gj.betti;
            for t in &gj.torsion {
                for pe in factor_u64(bigint_to_u64(t)?) {
                    for _ in 0..gi.betti {
                        torsion.push(pe);
                    }
                }
            }
            for t in &gi.torsion {
                for pe in factor_u64(bigint_to_u64(t)?) {
                    for _ in 0..gj.betti {
                        torsion.push(pe);
                    }
                }
            }
            for ti in &gi.torsion {
                for tj in &gj.torsion {
                    push_gcd_powers(&mut torsion, ti, tj)?;
                }
            }
        }
        if n > 0 {
            for i in 0..n {
                let gi = hk.group(i);
                let gj = hl.group(n - 1 - i);
                for ti in &gi.torsion {
                    for tj in &gj.torsion {
                        push_gcd_powers(&mut torsion, ti, tj)?;
                    }
                }
            }
        }
        torsion.sort_unstable();
        let got = hp.group(n);
        let got_torsion = got.prime_power_torsion()?;
        let this_ok = got.betti == betti && got_torsion == torsion;
        if !this_ok {
            ok = false;
        }
        details.push(format!(
            "n={}: rank {}={}, torsion {:?}={:?}",
            n, betti, got.betti, torsion, got_torsion
        ));
    }
    report.push("integral groups match graded formula", ok, &details.join("; "));
    Ok(report)
}

fn push_gcd_powers(out: &mut Vec<(u64, u32)>, a: &BigInt, b: &BigInt) -> Result<()> {
    let g = a.gcd(b);
    if g > BigInt::one() {
        for pe in factor_u64(bigint_to_u64(&g)?) {
            out.push(pe);
        }
    }
    Ok(())
}
