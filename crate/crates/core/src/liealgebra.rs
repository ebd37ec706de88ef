//! Chevalley basis of a simple Lie algebra: integer structure constants,
//! ad-representation matrices and signed lifts of diagram automorphisms.
//!
//! Basis order: `h_1..h_n` followed by `e_alpha` for every root in
//! [`RootSystem::roots`] order. Structure constants satisfy
//! `N_{-a,-b} = -N_{a,b}` and are fixed by making every extraspecial pair
//! positive, with positive roots ordered by height then coordinates.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmatrix::IntMatrix;
use crate::rootsystem::{DiagramAutomorphism, Root, RootSystem};

pub const CACHE_VERSION: u32 = 1;
pub const SIGNS_CONVENTION: &str = "extraspecial-positive";

/// A sparse integer vector in the Chevalley basis.
pub type BasisVector = Vec<(usize, i64)>;

#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    rs: RootSystem,
    /// Dense table `n_const[a * R + b]` over root indices; 0 when `a + b` is not a root.
    n_const: Vec<i32>,
    /// Root index of `a + b`, or `usize::MAX`.
    sum_index: Vec<usize>,
}

impl ChevalleyBasis {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let nroots = rs.roots().len();
        let mut sum_index = vec![usize::MAX; nroots * nroots];
        for (a, ra) in rs.roots().iter().enumerate() {
            for (b, rb) in rs.roots().iter().enumerate() {
                if let Some(c) = rs.index_of(&ra.add(rb)) {
                    sum_index[a * nroots + b] = c;
                }
            }
        }
        let mut cb = Self { rs: rs.clone(), n_const: vec![0; nroots * nroots], sum_index };
        cb.compute_constants()?;
        Ok(cb)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.roots().len()
    }

    fn nroots(&self) -> usize {
        self.rs.roots().len()
    }

    fn npos(&self) -> usize {
        self.rs.num_positive()
    }

    #[inline]
    fn neg_idx(&self, a: usize) -> usize {
        let np = self.npos();
        if a < np {
            a + np
        } else {
            a - np
        }
    }

    #[inline]
    fn is_pos(&self, a: usize) -> bool {
        a < self.npos()
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let c = self.sum_index[a * self.nroots() + b];
        (c != usize::MAX).then_some(c)
    }

    fn root(&self, a: usize) -> &Root {
        &self.rs.roots()[a]
    }

    fn norm_idx(&self, a: usize) -> i64 {
        self.rs.norm(self.root(a))
    }

    /// `p` in the `a`-string `b - p a, .., b + q a` through `b`.
    fn string_below(&self, a: usize, b: usize) -> i32 {
        let ra = self.root(a);
        let mut k = 0;
        let mut cur = self.root(b).sub(ra);
        while self.rs.is_root(&cur) {
            k += 1;
            cur = cur.sub(ra);
        }
        k
    }

    fn set(&mut self, a: usize, b: usize, v: i32) {
        let r = self.nroots();
        self.n_const[a * r + b] = v;
    }

    fn table(&self, a: usize, b: usize) -> i32 {
        self.n_const[a * self.nroots() + b]
    }

    // Resolves N_{a,b} for any pair from positive-pair data, using
    // N_{-a,-b} = -N_{a,b}, antisymmetry and the cyclic identity
    // N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) for a + b + c = 0.
    fn resolve(&self, a: usize, b: usize) -> Result<i64> {
        let Some(s) = self.sum(a, b) else { return Ok(0) };
        match (self.is_pos(a), self.is_pos(b)) {
            (true, true) => Ok(self.table(a, b) as i64),
            (false, false) => Ok(-self.resolve(self.neg_idx(a), self.neg_idx(b))?),
            (false, true) => Ok(-self.resolve(b, a)?),
            (true, false) => {
                let c = self.neg_idx(s);
                let (num, den) = if self.is_pos(s) {
                    // c negative: N_{a,b} = (c,c)/(a,a) N_{b,c} = -(c,c)/(a,a) N_{-b,-c}
                    let inner = self.resolve(self.neg_idx(b), self.neg_idx(c))?;
                    (-self.norm_idx(c) * inner, self.norm_idx(a))
                } else {
                    // c positive: N_{a,b} = (c,c)/(b,b) N_{c,a}
                    let inner = self.resolve(c, a)?;
                    (self.norm_idx(c) * inner, self.norm_idx(b))
                };
                if num % den != 0 {
                    return Err(Error::Internal(format!("non-integral N for roots {a},{b}")));
                }
                Ok(num / den)
            }
        }
    }

    fn compute_constants(&mut self) -> Result<()> {
        let np = self.npos();
        for xi in 0..np {
            if self.root(xi).height() < 2 {
                continue;
            }
            // special pairs (r, s) with r < s in root order and r + s = xi
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for r in 0..xi {
                for s in (r + 1)..xi {
                    if self.sum(r, s) == Some(xi) {
                        pairs.push((r, s));
                    }
                }
            }
            let Some(&(r1, s1)) = pairs.first() else {
                return Err(Error::Internal(format!("no decomposition for root {}", self.root(xi))));
            };
            let ext = self.string_below(r1, s1) + 1;
            self.set(r1, s1, ext);
            self.set(s1, r1, -ext);
            let xi_norm = self.norm_idx(xi);
            for &(r, s) in &pairs[1..] {
                let (nr1, ns1) = (self.neg_idx(r1), self.neg_idx(s1));
                let mut num_terms: i64 = 0;
                // -N_{s,-r1} N_{r,-s1}/(s-r1,s-r1) - N_{-r1,r} N_{s,-s1}/(r-r1,r-r1)
                let (mut t1, mut a1) = (0i64, 1i64);
                if let Some(c) = self.sum(s, nr1) {
                    t1 = self.resolve(s, nr1)? * self.resolve(r, ns1)?;
                    a1 = self.norm_idx(c);
                }
                let (mut t2, mut a2) = (0i64, 1i64);
                if let Some(c) = self.sum(nr1, r) {
                    t2 = self.resolve(nr1, r)? * self.resolve(s, ns1)?;
                    a2 = self.norm_idx(c);
                }
                num_terms += t1 * a2 + t2 * a1;
                // N_{r,s} N_{-r1,-s1} / (xi,xi) = -(t1/a1 + t2/a2), N_{-r1,-s1} = -ext
                let num = xi_norm * num_terms;
                let den = ext as i64 * a1 * a2;
                if num % den != 0 {
                    return Err(Error::Internal(format!("non-integral N for pair {r},{s}")));
                }
                let v = (num / den) as i32;
                let expected = self.string_below(r, s) + 1;
                if v.abs() != expected {
                    return Err(Error::Internal(format!(
                        "|N| = {} but string bound gives {} for {} + {}",
                        v.abs(),
                        expected,
                        self.root(r),
                        self.root(s)
                    )));
                }
                self.set(r, s, v);
                self.set(s, r, -v);
            }
        }
        // fill every remaining pair from the positive data
        let nr = self.nroots();
        for a in 0..nr {
            for b in 0..nr {
                if self.sum(a, b).is_some() && !(self.is_pos(a) && self.is_pos(b)) {
                    let v = self.resolve(a, b)? as i32;
                    self.set(a, b, v);
                }
            }
        }
        Ok(())
    }

    /// `N_{alpha,beta}`, or `None` when `alpha + beta` is not a root.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<Option<i32>> {
        let a = self.rs.index_of(alpha).ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        let b = self.rs.index_of(beta).ok_or_else(|| Error::NotARoot(beta.0.clone()))?;
        Ok(self.sum(a, b).map(|_| self.table(a, b)))
    }

    /// `N` by root indices; 0 if the sum is not a root.
    pub fn n_by_index(&self, a: usize, b: usize) -> i32 {
        self.table(a, b)
    }

    /// Every `(alpha, beta, N)` with `alpha + beta` a root, in index order.
    pub fn constants(&self) -> Vec<(usize, usize, i32)> {
        let nr = self.nroots();
        let mut out = Vec::new();
        for a in 0..nr {
            for b in 0..nr {
                if self.sum(a, b).is_some() {
                    out.push((a, b, self.table(a, b)));
                }
            }
        }
        out
    }

    /// Basis index of `e_alpha` for the root with index `a`.
    #[inline]
    pub fn e_index(&self, a: usize) -> usize {
        self.rs.rank() + a
    }

    /// Lie bracket of two basis vectors.
    pub fn bracket_basis(&self, x: usize, y: usize) -> BasisVector {
        let n = self.rs.rank();
        match (x < n, y < n) {
            (true, true) => Vec::new(),
            (true, false) => {
                let b = y - n;
                let c = self.rs.pairing(self.root(b), &self.rs.simple_root(x)) as i64;
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(y, c)]
                }
            }
            (false, true) => self.bracket_basis(y, x).into_iter().map(|(i, v)| (i, -v)).collect(),
            (false, false) => {
                let (a, b) = (x - n, y - n);
                if b == self.neg_idx(a) {
                    self.rs
                        .coroot_coefficients(self.root(a))
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .map(|(i, c)| (i, c as i64))
                        .collect()
                } else if let Some(s) = self.sum(a, b) {
                    vec![(self.e_index(s), self.table(a, b) as i64)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Bracket extended bilinearly to sparse vectors.
    pub fn bracket(&self, x: &[(usize, i64)], y: &[(usize, i64)]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim()];
        for &(i, a) in x {
            for &(j, b) in y {
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_alpha)` on the Chevalley basis.
    pub fn ad_matrix(&self, alpha: &Root) -> Result<IntMatrix> {
        let a = self.rs.index_of(alpha).ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        Ok(self.ad_matrix_by_index(a))
    }

    pub fn ad_matrix_by_index(&self, a: usize) -> IntMatrix {
        let d = self.dim();
        let x = self.e_index(a);
        let mut m = IntMatrix::zeros(d);
        for j in 0..d {
            for (i, v) in self.bracket_basis(x, j) {
                m.set(i, j, m.get(i, j) + v);
            }
        }
        m
    }

    /// `ad(e_alpha)^k / k!` for `k = 0..` up to the last nonzero power.
    pub fn divided_powers(&self, a: usize) -> Result<Vec<IntMatrix>> {
        let ad = self.ad_matrix_by_index(a);
        let mut out = vec![IntMatrix::identity(self.dim())];
        let mut k = 1i64;
        loop {
            let next = out.last().unwrap().mul(&ad);
            if next.is_zero() {
                break;
            }
            let div = next
                .div_exact(k)
                .ok_or_else(|| Error::Internal(format!("ad(e)^{k}/{k}! not integral")))?;
            out.push(div);
            k += 1;
        }
        Ok(out)
    }

    /// Lifts a diagram automorphism to a signed permutation of the basis.
    pub fn lift_diagram_automorphism(&self, rho: &DiagramAutomorphism) -> Result<SignedLift> {
        if !self.rs.preserves_cartan(rho) {
            return Err(Error::Internal(format!("{rho} does not preserve the Cartan matrix")));
        }
        let nr = self.nroots();
        let np = self.npos();
        let n = self.rs.rank();
        let mut image = vec![0usize; nr];
        for a in 0..nr {
            let img = self.rs.extend_to_roots(rho, self.root(a))?;
            image[a] = self.rs.index_of(&img).unwrap();
        }
        let mut eps = vec![0i8; nr];
        for a in 0..np {
            let ra = self.root(a);
            if ra.height() == 1 {
                eps[a] = 1;
                continue;
            }
            // xi = alpha_i + beta with the smallest such i
            let (i, beta) = (0..n)
                .find_map(|i| {
                    let b = ra.sub(&self.rs.simple_root(i));
                    self.rs.index_of(&b).filter(|&bi| self.is_pos(bi)).map(|bi| (i, bi))
                })
                .ok_or_else(|| Error::Internal(format!("no simple decomposition of {ra}")))?;
            let ai = self.rs.index_of(&self.rs.simple_root(i)).unwrap();
            let lhs = self.table(ai, beta);
            let rhs = self.table(image[ai], image[beta]);
            let ratio = eps[beta] as i32 * rhs / lhs;
            if ratio.abs() != 1 || rhs.abs() != lhs.abs() {
                return Err(Error::Internal("inconsistent sign system".into()));
            }
            eps[a] = ratio as i8;
        }
        for a in 0..np {
            eps[self.neg_idx(a)] = eps[a];
        }
        let d = self.dim();
        let mut target = vec![0usize; d];
        let mut sign = vec![1i8; d];
        for i in 0..n {
            target[i] = rho.image(i);
        }
        for a in 0..nr {
            target[self.e_index(a)] = self.e_index(image[a]);
            sign[self.e_index(a)] = eps[a];
        }
        let lift = SignedLift { rho: rho.clone(), eps, target, sign };
        if let Some((x, y)) = lift.first_bracket_violation(self) {
            return Err(Error::Internal(format!("signed lift fails on basis pair ({x},{y})")));
        }
        Ok(lift)
    }

    /// First basis triple violating the Jacobi identity, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let xy = self.bracket_basis(x, y);
                for z in 0..d {
                    let mut acc = self.bracket(&[(z, 1)], &xy);
                    let yz = self.bracket_basis(y, z);
                    for (k, v) in self.bracket(&[(x, 1)], &yz).into_iter().enumerate() {
                        acc[k] += v;
                    }
                    let zx = self.bracket_basis(z, x);
                    for (k, v) in self.bracket(&[(y, 1)], &zx).into_iter().enumerate() {
                        acc[k] += v;
                    }
                    if acc.iter().any(|&v| v != 0) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Checks antisymmetry and `|N_{a,b}| = p + 1` over every root pair.
    pub fn constant_violation(&self) -> Option<(usize, usize)> {
        let nr = self.nroots();
        for a in 0..nr {
            for b in 0..nr {
                let n_ab = self.table(a, b);
                if self.sum(a, b).is_none() {
                    if n_ab != 0 {
                        return Some((a, b));
                    }
                    continue;
                }
                if n_ab != -self.table(b, a) || n_ab.abs() != self.string_below(a, b) + 1 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    // ---- disk cache -------------------------------------------------------

    fn cache_file(dir: &Path, rs: &RootSystem) -> PathBuf {
        dir.join(format!("{}-v{}-{}.json", rs.label(), CACHE_VERSION, SIGNS_CONVENTION))
    }

    pub fn to_cache(&self) -> ConstantsCache {
        let roots = self.rs.roots();
        ConstantsCache {
            version: CACHE_VERSION,
            r#type: self.rs.kind().letter().to_string(),
            rank: self.rs.rank(),
            constants: self
                .constants()
                .into_iter()
                .map(|(a, b, n)| CachedConstant { alpha: roots[a].0.clone(), beta: roots[b].0.clone(), n })
                .collect(),
            signs_convention: SIGNS_CONVENTION.to_string(),
        }
    }

    /// Rebuilds a basis from cached constants, rejecting mismatched metadata.
    pub fn from_cache(rs: &RootSystem, cache: &ConstantsCache) -> Result<Self> {
        if cache.version != CACHE_VERSION
            || cache.signs_convention != SIGNS_CONVENTION
            || cache.rank != rs.rank()
            || cache.r#type != rs.kind().letter().to_string()
        {
            return Err(Error::Cache("metadata mismatch".into()));
        }
        let nroots = rs.roots().len();
        let mut sum_index = vec![usize::MAX; nroots * nroots];
        for (a, ra) in rs.roots().iter().enumerate() {
            for (b, rb) in rs.roots().iter().enumerate() {
                if let Some(c) = rs.index_of(&ra.add(rb)) {
                    sum_index[a * nroots + b] = c;
                }
            }
        }
        let mut cb = Self { rs: rs.clone(), n_const: vec![0; nroots * nroots], sum_index };
        let mut filled = 0usize;
        for c in &cache.constants {
            let a = rs.index_of(&Root(c.alpha.clone())).ok_or_else(|| Error::Cache("unknown root".into()))?;
            let b = rs.index_of(&Root(c.beta.clone())).ok_or_else(|| Error::Cache("unknown root".into()))?;
            if cb.sum(a, b).is_none() {
                return Err(Error::Cache("constant for a non-root sum".into()));
            }
            cb.set(a, b, c.n);
            filled += 1;
        }
        if filled != cb.constants().len() {
            return Err(Error::Cache("incomplete constant table".into()));
        }
        Ok(cb)
    }

    /// Loads from `dir` if a valid cache file exists, otherwise computes and
    /// writes one. Writes go to a temporary file renamed into place.
    pub fn load_or_compute(rs: &RootSystem, dir: Option<&Path>) -> Result<Self> {
        let Some(dir) = dir else { return Self::new(rs) };
        let path = Self::cache_file(dir, rs);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(cache) = serde_json::from_str::<ConstantsCache>(&text) {
                if let Ok(cb) = Self::from_cache(rs, &cache) {
                    return Ok(cb);
                }
            }
        }
        let cb = Self::new(rs)?;
        fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
        let tmp = dir.join(format!(".{}.{}.tmp", rs.label(), std::process::id()));
        let body = serde_json::to_string(&cb.to_cache()).map_err(|e| Error::Cache(e.to_string()))?;
        fs::write(&tmp, body).map_err(|e| Error::Cache(e.to_string()))?;
        fs::rename(&tmp, &path).map_err(|e| Error::Cache(e.to_string()))?;
        Ok(cb)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedConstant {
    pub alpha: Vec<i32>,
    pub beta: Vec<i32>,
    #[serde(rename = "N")]
    pub n: i32,
}

/// On-disk structure-constant table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsCache {
    pub version: u32,
    #[serde(rename = "type")]
    pub r#type: String,
    pub rank: usize,
    pub constants: Vec<CachedConstant>,
    pub signs_convention: String,
}

/// A diagram automorphism lifted to the Chevalley basis:
/// `e_alpha -> eps_alpha e_{rho(alpha)}`, `h_i -> h_{rho(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedLift {
    rho: DiagramAutomorphism,
    eps: Vec<i8>,
    target: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedLift {
    pub fn rho(&self) -> &DiagramAutomorphism {
        &self.rho
    }

    /// Sign `eps_alpha` by root index.
    pub fn epsilon(&self, a: usize) -> i8 {
        self.eps[a]
    }

    pub fn epsilons(&self) -> &[i8] {
        &self.eps
    }

    /// Image of basis vector `x` as `(index, sign)`.
    pub fn map_basis(&self, x: usize) -> (usize, i8) {
        (self.target[x], self.sign[x])
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// The lift as an integer matrix (column `j` is the image of basis vector `j`).
    pub fn matrix(&self) -> IntMatrix {
        let d = self.dim();
        let mut m = IntMatrix::zeros(d);
        for j in 0..d {
            m.set(self.target[j], j, self.sign[j] as i64);
        }
        m
    }

    fn apply_vec(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                out[self.target[j]] += self.sign[j] as i64 * c;
            }
        }
        out
    }

    /// First basis pair with `sigma[x,y] != [sigma x, sigma y]`.
    pub fn first_bracket_violation(&self, cb: &ChevalleyBasis) -> Option<(usize, usize)> {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let xy = cb.bracket(&[(x, 1)], &[(y, 1)]);
                let lhs = self.apply_vec(&xy);
                let (tx, sx) = self.map_basis(x);
                let (ty, sy) = self.map_basis(y);
                let rhs = cb.bracket(&[(tx, sx as i64)], &[(ty, sy as i64)]);
                if lhs != rhs {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(c: char, n: usize) -> ChevalleyBasis {
        ChevalleyBasis::new(&RootSystem::from_label(c, n).unwrap()).unwrap()
    }

    #[test]
    fn a2_constant() {
        let cb = basis('A', 2);
        let rs = cb.root_system();
        let n = cb.structure_constant(&rs.simple_root(0), &rs.simple_root(1)).unwrap().unwrap();
        assert_eq!(n.abs(), 1);
        // alpha_1 + alpha_1 is not a root
        assert_eq!(cb.structure_constant(&rs.simple_root(0), &rs.simple_root(0)).unwrap(), None);
        assert!(cb.structure_constant(&Root(vec![2, 0]), &rs.simple_root(0)).is_err());
    }

    #[test]
    fn g2_max_constant_is_three() {
        let cb = basis('G', 2);
        let max = cb.constants().iter().map(|c| c.2.abs()).max().unwrap();
        assert_eq!(max, 3);
    }

    #[test]
    fn jacobi_and_antisymmetry() {
        for (c, n) in [('A', 1), ('A', 2), ('A', 3), ('B', 2), ('C', 3), ('D', 4), ('G', 2)] {
            let cb = basis(c, n);
            assert_eq!(cb.constant_violation(), None, "{c}{n}");
            assert_eq!(cb.jacobi_violation(), None, "{c}{n}");
        }
    }

    #[test]
    fn exceptional_constants_consistent() {
        for (c, n) in [('F', 4), ('E', 6)] {
            let cb = basis(c, n);
            assert_eq!(cb.constant_violation(), None, "{c}{n}");
        }
    }

    #[test]
    fn sl2_ad_matrix() {
        let cb = basis('A', 1);
        let rs = cb.root_system();
        let alpha = rs.simple_root(0);
        let ad = cb.ad_matrix(&alpha).unwrap();
        // basis: h, e_alpha, e_-alpha
        let e_minus = [0, 0, 1];
        assert_eq!(ad.apply(&e_minus), vec![1, 0, 0]);
        let h = [1, 0, 0];
        assert_eq!(ad.apply(&h), vec![0, -2, 0]);
        assert_eq!(ad.apply(&[0, 1, 0]), vec![0, 0, 0]);
        assert!(ad.mul(&ad).mul(&ad).is_zero());
    }

    #[test]
    fn divided_powers_integral() {
        for (c, n) in [('A', 3), ('D', 4), ('G', 2), ('B', 3)] {
            let cb = basis(c, n);
            for a in 0..cb.root_system().roots().len() {
                let dp = cb.divided_powers(a).unwrap();
                assert!(dp.len() <= 5, "{c}{n}: nilpotency index {}", dp.len());
                let ad = cb.ad_matrix_by_index(a);
                assert!(ad.apply(&{
                    let mut v = vec![0; cb.dim()];
                    v[cb.e_index(a)] = 1;
                    v
                })
                .iter()
                .all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn identity_lift() {
        let cb = basis('A', 3);
        let lift = cb.lift_diagram_automorphism(&DiagramAutomorphism::identity(3)).unwrap();
        assert!(lift.epsilons().iter().all(|&e| e == 1));
        assert_eq!(lift.matrix(), IntMatrix::identity(cb.dim()));
    }

    #[test]
    fn a2_swap_lift_signs() {
        let cb = basis('A', 2);
        let rs = cb.root_system().clone();
        let rho = DiagramAutomorphism::from_cycles(2, "(1 2)").unwrap();
        let lift = cb.lift_diagram_automorphism(&rho).unwrap();
        let i1 = rs.index_of(&rs.simple_root(0)).unwrap();
        let i2 = rs.index_of(&rs.simple_root(1)).unwrap();
        let i12 = rs.index_of(&Root(vec![1, 1])).unwrap();
        assert_eq!(lift.epsilon(i1), 1);
        assert_eq!(lift.epsilon(i2), 1);
        // eps_{a1+a2} N_{a2,a1} = N_{a1,a2}
        let n12 = cb.n_by_index(i1, i2);
        let n21 = cb.n_by_index(i2, i1);
        assert_eq!(lift.epsilon(i12) as i32 * n21, n12);
        assert_eq!(lift.epsilon(i12), -1);
    }

    #[test]
    fn lifts_are_automorphisms() {
        for (c, n) in [('A', 2), ('A', 3), ('D', 4), ('E', 6)] {
            let cb = basis(c, n);
            let rs = cb.root_system();
            for rho in rs.diagram_automorphisms() {
                let lift = cb.lift_diagram_automorphism(&rho).unwrap();
                assert_eq!(lift.first_bracket_violation(&cb), None);
                let np = rs.num_positive();
                for a in 0..np {
                    assert_eq!(lift.epsilon(a), lift.epsilon(a + np));
                    if rs.roots()[a].height() == 1 {
                        assert_eq!(lift.epsilon(a), 1);
                        assert_eq!(lift.epsilon(a + np), 1);
                    }
                }
                for i in 0..rs.rank() {
                    assert_eq!(lift.map_basis(i), (rho.image(i), 1));
                }
            }
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let rs = RootSystem::from_label('D', 4).unwrap();
        let first = ChevalleyBasis::load_or_compute(&rs, Some(dir.path())).unwrap();
        let file = ChevalleyBasis::cache_file(dir.path(), &rs);
        assert!(file.exists());
        let second = ChevalleyBasis::load_or_compute(&rs, Some(dir.path())).unwrap();
        assert_eq!(first.constants(), second.constants());
        let text = fs::read_to_string(&file).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["signs_convention"], "extraspecial-positive");
        assert_eq!(v["type"], "D");
        assert_eq!(v["rank"], 4);
        assert!(v["constants"][0]["N"].is_i64());
    }

    #[test]
    fn corrupt_cache_recomputes() {
        let dir = tempfile::tempdir().unwrap();
        let rs = RootSystem::from_label('A', 2).unwrap();
        fs::write(ChevalleyBasis::cache_file(dir.path(), &rs), "{not json").unwrap();
        let cb = ChevalleyBasis::load_or_compute(&rs, Some(dir.path())).unwrap();
        assert_eq!(cb.constant_violation(), None);
        let mut bad = cb.to_cache();
        bad.rank = 3;
        assert!(ChevalleyBasis::from_cache(&rs, &bad).is_err());
    }
}
