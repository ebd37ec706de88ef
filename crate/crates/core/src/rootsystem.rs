//! Irreducible root systems, Cartan data and the diagram automorphism group.
//!
//! Simple roots use Bourbaki numbering (1-based in all user-facing text):
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n        (n short)
//! C_n  1 - 2 - ... - (n-1) <= n        (n long)
//! D_n  1 - 2 - ... - (n-2) - (n-1)
//!                       \
//!                        n
//! E_n  1 - 3 - 4 - 5 - ... - n,  2 attached to 4
//! F_4  1 - 2 => 3 - 4                  (1, 2 long)
//! G_2  1 <= 2                          (1 short)
//! ```
//!
//! Roots are integer coordinate vectors in the simple-root basis. Inner
//! products come from an integral Gram matrix normalised so that short roots
//! have squared length 2.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A root, as coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Self {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale_add(&self, k: i32, other: &Self) -> Self {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Cartan type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Self::A,
            'B' => Self::B,
            'C' => Self::C,
            'D' => Self::D,
            'E' => Self::E,
            'F' => Self::F,
            'G' => Self::G,
            _ => return None,
        })
    }

    pub fn letter(&self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }

    pub fn is_valid_rank(&self, n: usize) -> bool {
        match self {
            Self::A => n >= 1,
            Self::B => n >= 2,
            Self::C => n >= 3,
            Self::D => n >= 4,
            Self::E => (6..=8).contains(&n),
            Self::F => n == 4,
            Self::G => n == 2,
        }
    }
}

/// Symmetric Gram matrix of the simple roots, short roots of squared length 2.
fn gram_matrix(kind: CartanType, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match kind {
        CartanType::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        CartanType::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        CartanType::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        CartanType::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        CartanType::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        CartanType::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        CartanType::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

/// A reduced irreducible root system with its simple system and Cartan matrix.
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i32>>,
    /// Positive roots by (height, coordinates), then their negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn build(kind: CartanType, rank: usize) -> Result<Self> {
        if !kind.is_valid_rank(rank) {
            return Err(Error::InvalidType(kind.letter(), rank));
        }
        let gram = gram_matrix(kind, rank);
        let cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| (2 * gram[i][j] / gram[i][i]) as i32)
                    .collect()
            })
            .collect();
        let mut rs = RootSystem { kind, rank, gram, cartan, roots: Vec::new(), index: HashMap::new() };
        let positive = rs.generate_positive_roots();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        rs.index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        rs.roots = roots;
        Ok(rs)
    }

    pub fn from_label(letter: char, rank: usize) -> Result<Self> {
        let kind = CartanType::from_char(letter).ok_or(Error::InvalidType(letter, rank))?;
        Self::build(kind, rank)
    }

    // Grows positive roots height by height using alpha_i-strings: for a root
    // beta, the string beta - r a_i .. beta + q a_i has r - q = <beta, a_i^v>.
    fn generate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut known: HashSet<Root> = HashSet::new();
        let mut layer: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut all = Vec::new();
        while !layer.is_empty() {
            layer.sort();
            known.extend(layer.iter().cloned());
            all.extend(layer.iter().cloned());
            let mut next: HashSet<Root> = HashSet::new();
            for beta in &layer {
                for i in 0..n {
                    let ai = Root::simple(n, i);
                    let mut r = 0;
                    let mut down = beta.sub(&ai);
                    while known.contains(&down) {
                        r += 1;
                        down = down.sub(&ai);
                    }
                    let q = r - self.pairing(beta, &ai);
                    if q > 0 {
                        next.insert(beta.add(&ai));
                    }
                }
            }
            layer = next.into_iter().collect();
        }
        all
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    /// Cartan matrix with entry `[i][j] = <alpha_j, alpha_i^v>`.
    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Symmetric bilinear form on the root lattice.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a.0[i] as i64 * b.0[j] as i64 * self.gram[i][j];
            }
        }
        s
    }

    /// Squared length of `a`, short roots normalised to 2.
    pub fn norm(&self, a: &Root) -> i64 {
        self.inner(a, a)
    }

    /// `<a, b^v> = 2(a,b)/(b,b)` without membership checks.
    pub(crate) fn pairing(&self, a: &Root, b: &Root) -> i32 {
        (2 * self.inner(a, b) / self.inner(b, b)) as i32
    }

    /// Cartan integer `<alpha, beta^v>`; both arguments must be roots.
    pub fn cartan_integer(&self, alpha: &Root, beta: &Root) -> Result<i32> {
        for r in [alpha, beta] {
            if !self.is_root(r) {
                return Err(Error::NotARoot(r.0.clone()));
            }
        }
        Ok(self.pairing(alpha, beta))
    }

    /// Coefficients of the coroot `alpha^v` over the simple coroots.
    pub fn coroot_coefficients(&self, alpha: &Root) -> Vec<i32> {
        let na = self.norm(alpha);
        (0..self.rank)
            .map(|i| (alpha.0[i] as i64 * self.gram[i][i] / na) as i32)
            .collect()
    }

    pub fn simple_reflection(&self, i: usize, beta: &Root) -> Root {
        let ai = self.simple_root(i);
        beta.scale_add(-self.pairing(beta, &ai), &ai)
    }

    /// Every permutation of the simple roots preserving the Cartan matrix.
    pub fn diagram_automorphisms(&self) -> Vec<DiagramAutomorphism> {
        let n = self.rank;
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.search_automorphisms(0, &mut perm, &mut used, &mut out);
        out.sort();
        out
    }

    fn search_automorphisms(
        &self,
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<DiagramAutomorphism>,
    ) {
        let n = self.rank;
        if k == n {
            out.push(DiagramAutomorphism { perm: perm.clone() });
            return;
        }
        for img in 0..n {
            if used[img] {
                continue;
            }
            // prune: rows/columns among already-placed nodes must match
            let ok = (0..=k).all(|j| {
                let pj = if j == k { img } else { perm[j] };
                self.cartan[pj][img] == self.cartan[j][k] && self.cartan[img][pj] == self.cartan[k][j]
            });
            if !ok {
                continue;
            }
            perm[k] = img;
            used[img] = true;
            self.search_automorphisms(k + 1, perm, used, out);
            used[img] = false;
            perm[k] = usize::MAX;
        }
    }

    pub fn extend_to_roots(&self, rho: &DiagramAutomorphism, alpha: &Root) -> Result<Root> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.0.clone()));
        }
        let image = rho.apply_coords(alpha);
        if !self.is_root(&image) {
            return Err(Error::Internal(format!("image of {alpha} is not a root")));
        }
        Ok(image)
    }

    pub fn fixed_simple_root_exists(&self, rho: &DiagramAutomorphism) -> bool {
        rho.fixed_points().next().is_some()
    }

    /// Checks that a permutation preserves the Cartan matrix.
    pub fn preserves_cartan(&self, rho: &DiagramAutomorphism) -> bool {
        let n = self.rank;
        rho.perm.len() == n
            && (0..n).all(|i| (0..n).all(|j| self.cartan[rho.perm[i]][rho.perm[j]] == self.cartan[i][j]))
    }
}

/// A permutation of the simple roots, `perm[i]` the image of node `i` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect() }
    }

    /// Builds from a 0-based image vector, checking it is a permutation.
    pub fn from_images(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &i in &perm {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("not a permutation: {perm:?}")));
            }
            seen[i] = true;
        }
        Ok(Self { perm })
    }

    /// Parses 1-based cycle notation such as `(1 3 4)` or `(1,5)(2,4)`;
    /// an empty string or `()` is the identity.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for chunk in text.split(')') {
            let chunk = chunk.trim().trim_start_matches('(');
            if chunk.trim().is_empty() {
                continue;
            }
            let pts: Vec<usize> = chunk
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad cycle entry {s:?}"))))
                .collect::<Result<_>>()?;
            for &x in &pts {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::Parse(format!("bad cycle {chunk:?} for rank {n}")));
                }
                seen[x - 1] = true;
            }
            for w in 0..pts.len() {
                perm[pts[w] - 1] = pts[(w + 1) % pts.len()] - 1;
            }
        }
        Ok(Self { perm })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        Self { perm: other.perm.iter().map(|&i| self.perm[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j] = i;
        }
        Self { perm: inv }
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.perm.iter().enumerate().filter(|(i, &j)| *i == j).map(|(i, _)| i)
    }

    /// Orbits on the nodes, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                orbit.push(i);
                i = self.perm[i];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Linear extension to the root lattice.
    pub fn apply_coords(&self, alpha: &Root) -> Root {
        let mut out = vec![0; alpha.0.len()];
        for (i, &c) in alpha.0.iter().enumerate() {
            out[self.perm[i]] = c;
        }
        Root(out)
    }

    /// 1-based cycle notation, fixed points omitted; `()` for the identity.
    pub fn cycles(&self) -> String {
        let mut s = String::new();
        let n = self.perm.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.perm[i];
            }
            s.push('(');
            s.push_str(&cyc.join(" "));
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycles())
    }
}
