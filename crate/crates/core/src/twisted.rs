//! Twisted conjugacy: `x ~ g x phi(g)^{-1}`.
//!
//! Orbits are computed by union-find over the generator moves
//! `x -> s x phi(s)^{-1}`, which generate the full orbit in a finite group.

use std::sync::Arc;

use serde::Serialize;

use crate::automorphisms::{AutTable, Automorphism};
use crate::chevgroup::{classical, classical_matrix_group, ChevalleyGroup, ClassicalKind};
use crate::error::{Error, Result};
use crate::group::{is_subgroup, GroupRef, IndexedGroup, ProductGroup};
use crate::liealgebra::ChevalleyBasis;
use crate::matrix::GroupElement;
use crate::report::CheckReport;
use crate::rootsystem::RootSystem;
use crate::scalars::PrimeField;

/// Classes larger than this keep only their size and representative.
pub const CLASS_SET_LIMIT: usize = 10_000;

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let up = self.parent[self.parent[x] as usize];
            self.parent[x] = up;
            x = up as usize;
        }
        x
    }

    // the smaller index becomes the root, so roots are class minima
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TwistedClass {
    /// Encoding-minimal member (smallest index).
    pub rep: usize,
    pub size: usize,
    #[serde(skip)]
    pub elements: Option<Vec<usize>>,
}

/// The partition of a group into `phi`-twisted classes.
#[derive(Debug, Clone)]
pub struct TwistedPartition {
    pub group: String,
    pub automorphism: String,
    pub classes: Vec<TwistedClass>,
    class_of: Vec<u32>,
}

impl TwistedPartition {
    /// The Reidemeister number.
    pub fn r(&self) -> usize {
        self.classes.len()
    }

    /// Class id of element `x`; ids follow representative order.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Partition check: class sizes sum to the group order and every element
    /// lies in the class its id names.
    pub fn is_partition(&self) -> bool {
        let total: usize = self.classes.iter().map(|c| c.size).sum();
        let mut counts = vec![0usize; self.classes.len()];
        for &c in &self.class_of {
            counts[c as usize] += 1;
        }
        total == self.class_of.len()
            && counts.iter().zip(&self.classes).all(|(&n, c)| n == c.size)
            && self.classes.iter().enumerate().all(|(i, c)| self.class_of(c.rep) == i)
    }

    pub fn summary(&self, g: &dyn IndexedGroup) -> PartitionSummary {
        PartitionSummary {
            group: self.group.clone(),
            automorphism: self.automorphism.clone(),
            r: self.r(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassSummary { rep: g.describe(c.rep), size: c.size })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub rep: String,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionSummary {
    pub group: String,
    pub automorphism: String,
    #[serde(rename = "R")]
    pub r: usize,
    pub classes: Vec<ClassSummary>,
}

fn twist_move(g: &dyn IndexedGroup, s: usize, phis_inv: usize, x: usize) -> usize {
    g.mul(g.mul(s, x), phis_inv)
}

/// The orbit `{g x phi(g)^{-1}}`, sorted.
pub fn twisted_class(phi: &AutTable, x: usize) -> Vec<usize> {
    let g = phi.group().as_ref();
    let moves: Vec<(usize, usize)> =
        g.generators().iter().map(|&s| (s, g.inv(phi.apply(s)))).collect();
    let mut seen = vec![false; g.order()];
    seen[x] = true;
    let mut stack = vec![x];
    let mut out = vec![x];
    while let Some(y) = stack.pop() {
        for &(s, t) in &moves {
            let z = twist_move(g, s, t, y);
            if !seen[z] {
                seen[z] = true;
                out.push(z);
                stack.push(z);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The full twisted-class partition.
pub fn reidemeister(phi: &AutTable) -> TwistedPartition {
    let g = phi.group().as_ref();
    let n = g.order();
    let moves: Vec<(usize, usize)> =
        g.generators().iter().map(|&s| (s, g.inv(phi.apply(s)))).collect();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for &(s, t) in &moves {
            uf.union(x, twist_move(g, s, t, x));
        }
    }
    let mut class_of = vec![u32::MAX; n];
    let mut classes: Vec<TwistedClass> = Vec::new();
    for x in 0..n {
        let root = uf.find(x);
        if root == x {
            class_of[x] = classes.len() as u32;
            classes.push(TwistedClass { rep: x, size: 0, elements: Some(Vec::new()) });
        } else {
            class_of[x] = class_of[root];
        }
        let c = &mut classes[class_of[x] as usize];
        c.size += 1;
        if c.size > CLASS_SET_LIMIT {
            c.elements = None;
        } else if let Some(v) = c.elements.as_mut() {
            v.push(x);
        }
    }
    TwistedPartition {
        group: g.label().to_string(),
        automorphism: phi.descriptor().to_string(),
        classes,
        class_of,
    }
}

/// Ordinary conjugacy classes, counted independently of the union-find
/// engine by sweeping `g x g^{-1}` over all `g`.
pub fn conjugacy_class_count(g: &dyn IndexedGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        count += 1;
        for h in 0..n {
            seen[g.mul(g.mul(h, x), g.inv(h))] = true;
        }
    }
    count
}

/// `g -> g phi(g)^{-1}` is onto.
pub fn coincidence_surjective(phi: &AutTable) -> bool {
    let g = phi.group().as_ref();
    let mut hit = vec![false; g.order()];
    for x in 0..g.order() {
        hit[g.mul(x, g.inv(phi.apply(x)))] = true;
    }
    hit.iter().all(|&b| b)
}

/// `{x : phi(x) = x}`, checked to be a subgroup.
pub fn fixed_subgroup(phi: &AutTable) -> Result<Vec<usize>> {
    let fixed = phi.fixed_points();
    if !is_subgroup(phi.group().as_ref(), &fixed) {
        return Err(Error::Internal("fixed points do not form a subgroup".into()));
    }
    Ok(fixed)
}

#[derive(Debug, Clone, Serialize)]
pub struct InnerShiftReport {
    pub g: String,
    pub r_phi: usize,
    pub r_shifted: usize,
    /// `[x]_{phi o Int_g} -> [x phi(g)]_phi` is well defined and bijective.
    pub map_bijective: bool,
    pub pass: bool,
}

/// Checks `R(phi o Int_g) = R(phi)` through the explicit class bijection.
pub fn inner_shift_check(phi: &AutTable, g: usize) -> InnerShiftReport {
    let grp = phi.group().as_ref();
    let shifted = phi.compose_inner(g);
    let p_phi = reidemeister(phi);
    let p_shift = reidemeister(&shifted);
    let pg = phi.apply(g);
    let mut map = vec![usize::MAX; p_shift.r()];
    let mut well_defined = true;
    for x in 0..grp.order() {
        let src = p_shift.class_of(x);
        let dst = p_phi.class_of(grp.mul(x, pg));
        if map[src] == usize::MAX {
            map[src] = dst;
        } else if map[src] != dst {
            well_defined = false;
        }
    }
    let mut hit = vec![false; p_phi.r()];
    for &d in &map {
        if d != usize::MAX {
            hit[d] = true;
        }
    }
    let bijective = well_defined && p_shift.r() == p_phi.r() && hit.iter().all(|&b| b);
    InnerShiftReport {
        g: grp.describe(g),
        r_phi: p_phi.r(),
        r_shifted: p_shift.r(),
        map_bijective: bijective,
        pass: bijective && p_phi.r() == p_shift.r(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SesReport {
    pub group: String,
    pub quotient_order: usize,
    pub r_phi: usize,
    pub r_quotient: usize,
    pub projection_well_defined: bool,
    pub projection_surjective: bool,
    pub pass: bool,
}

/// For `1 -> N -> G -> G/N -> 1` with `phi(N) = N`: the class map
/// `[x]_phi -> [pi x]_{phi_bar}` is well defined and onto, so `R(phi) >= R(phi_bar)`.
pub fn ses_check(phi: &AutTable, n: &[usize]) -> Result<SesReport> {
    let g = phi.group().as_ref();
    let (q, phibar) = phi.induced_quotient(format!("{}/N", g.label()), n)?;
    let p = reidemeister(phi);
    let pq = reidemeister(&phibar);
    let mut map = vec![usize::MAX; p.r()];
    let mut well_defined = true;
    for x in 0..g.order() {
        let src = p.class_of(x);
        let dst = pq.class_of(q.project(x));
        if map[src] == usize::MAX {
            map[src] = dst;
        } else if map[src] != dst {
            well_defined = false;
        }
    }
    let mut hit = vec![false; pq.r()];
    for &d in &map {
        hit[d] = true;
    }
    let surjective = hit.iter().all(|&b| b);
    Ok(SesReport {
        group: g.label().to_string(),
        quotient_order: q.order(),
        r_phi: p.r(),
        r_quotient: pq.r(),
        projection_well_defined: well_defined,
        projection_surjective: surjective,
        pass: well_defined && surjective && p.r() >= pq.r(),
    })
}

/// The unique unitriangular `y` with `y g = d y d^{-1}`, so that
/// `g = y^{-1} d y d^{-1}` is twisted-conjugate to the identity under `phi_d`.
pub fn solve_unipotent(d: &GroupElement, g: &GroupElement) -> Result<GroupElement> {
    let n = d.dim();
    let f = d.field();
    if g.dim() != n || g.field() != f {
        return Err(Error::DomainMismatch("d and g differ in size or field".into()));
    }
    if !d.is_diagonal() || d.determinant() == 0 {
        return Err(Error::Parse("d must be an invertible diagonal matrix".into()));
    }
    if !g.is_upper_unitriangular() {
        return Err(Error::OutsideDomain);
    }
    let t = d.diagonal_entries();
    let mut coef = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = f.sub_raw(f.mul_raw(t[i], f.inv_raw(t[j])?), 1);
            if c == 0 {
                return Err(Error::DegenerateTorus);
            }
            coef[i][j] = f.inv_raw(c)?;
        }
    }
    let mut y = GroupElement::identity(f, n);
    for gap in 1..n {
        for i in 0..n - gap {
            let j = i + gap;
            let mut rhs = g.get(i, j);
            for k in i + 1..j {
                rhs = f.add_raw(rhs, f.mul_raw(y.get(i, k), g.get(k, j)));
            }
            y.set(i, j, f.mul_raw(coef[i][j], rhs));
        }
    }
    if y.mul(g) != y.conjugate_by(d, &d.inverse()?) {
        return Err(Error::Internal("unipotent solution failed verification".into()));
    }
    Ok(y)
}

/// First `(t_1..t_n)` in `(GF(p)^x)^n`, lexicographic from `(1..1)`, with
/// `prod_j t_j^{<a, b_j>} != 1` for every positive root `a`.
pub fn unipo_torus_search(rs: &RootSystem, p: u32) -> Result<Vec<u32>> {
    let f = PrimeField::new(p)?;
    let n = rs.rank();
    let pairings: Vec<Vec<i32>> = rs
        .positive_roots()
        .iter()
        .map(|a| (0..n).map(|j| rs.pairing(a, &rs.simple_root(j))).collect())
        .collect();
    let mut t = vec![1u32; n];
    loop {
        let ok = pairings.iter().all(|c| {
            let v = c.iter().zip(&t).fold(1u32, |acc, (&e, &tj)| {
                f.mul_raw(acc, f.elem(tj as i64).pow(e as i64).unwrap().value())
            });
            v != 1
        });
        if ok {
            return Ok(t);
        }
        // odometer with the last coordinate fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Err(Error::FieldTooSmall);
            }
            k -= 1;
            if t[k] + 1 < p {
                t[k] += 1;
                for v in &mut t[k + 1..] {
                    *v = 1;
                }
                break;
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UnipoReport {
    pub group: String,
    pub torus: Vec<u32>,
    pub unipotent_order: usize,
    pub fixed_order: usize,
    #[serde(rename = "R")]
    pub r: usize,
    pub coincidence_surjective: bool,
    pub pass: bool,
}

/// Conjugation by a regular torus element on the positive unipotent subgroup:
/// trivial fixed points and a single twisted class.
pub fn unipo_analysis(rs: &RootSystem, p: u32, cap: usize) -> Result<UnipoReport> {
    let t = unipo_torus_search(rs, p)?;
    let cb = ChevalleyBasis::new(rs)?;
    let cg = ChevalleyGroup::new(&cb, PrimeField::new(p)?)?;
    let h = cg.torus_element(&t)?;
    let u: GroupRef = Arc::new(cg.unipotent_subgroup(cap)?);
    let phi = AutTable::new(u.clone(), Automorphism::Conjugation(h))?;
    let fixed = fixed_subgroup(&phi)?;
    let part = reidemeister(&phi);
    let surj = coincidence_surjective(&phi);
    Ok(UnipoReport {
        group: u.label().to_string(),
        torus: t,
        unipotent_order: u.order(),
        fixed_order: fixed.len(),
        r: part.r(),
        coincidence_surjective: surj,
        pass: fixed.len() == 1 && part.r() == 1 && surj,
    })
}

/// Cycles of a 0-based permutation, each starting at its smallest member.
pub fn perm_cycle_list(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for i in 0..sigma.len() {
        if seen[i] {
            continue;
        }
        let mut c = vec![];
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            c.push(j);
            j = sigma[j];
        }
        out.push(c);
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleReport {
    pub cycle: Vec<usize>,
    pub composite: String,
    #[serde(rename = "R")]
    pub r: usize,
    /// `e_i(a) ~ e_i(b)` in `G^n` iff `a ~ b` under the composite, for all `a, b`.
    pub reduction_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductTwistReport {
    pub group: String,
    pub n: usize,
    pub sigma: String,
    #[serde(rename = "R")]
    pub r: usize,
    pub cycles: Vec<CycleReport>,
    pub product_of_cycle_r: usize,
    pub pass: bool,
}

/// `R` of the product twist on `G^n` against the per-cycle composites
/// `phi_i o phi_{sigma^{-1}(i)} o .. o phi_{sigma^{-(r-1)}(i)}` on `G`.
pub fn product_twist_analysis(
    g: GroupRef,
    phis: &[Automorphism],
    sigma: &[usize],
    cap: usize,
) -> Result<ProductTwistReport> {
    let n = phis.len();
    if sigma.len() != n {
        return Err(Error::Parse("sigma and factor list differ in length".into()));
    }
    let inv = crate::automorphisms::invert_perm(sigma)?;
    let pg = Arc::new(ProductGroup::power(g.clone(), n, cap)?);
    let pref: GroupRef = pg.clone();
    let twist = Automorphism::ProductTwist { factors: phis.to_vec(), sigma: sigma.to_vec() };
    let psi = AutTable::new(pref, twist)?;
    let part = reidemeister(&psi);
    let tables: Vec<AutTable> =
        phis.iter().map(|a| AutTable::new(g.clone(), a.clone())).collect::<Result<_>>()?;
    let mut cycles = Vec::new();
    let mut product = 1usize;
    let ids = vec![g.identity(); n];
    for cyc in perm_cycle_list(sigma) {
        let i = cyc[0];
        let mut comp = tables[i].clone();
        let mut j = inv[i];
        for _ in 1..cyc.len() {
            comp = comp.compose(&tables[j])?;
            j = inv[j];
        }
        let pc = reidemeister(&comp);
        let embed = |a: usize| {
            let mut c = ids.clone();
            c[i] = a;
            pg.encode(&c)
        };
        let emb: Vec<usize> = (0..g.order()).map(embed).collect();
        let mut holds = true;
        'outer: for a in 0..g.order() {
            for b in a..g.order() {
                if part.same_class(emb[a], emb[b]) != pc.same_class(a, b) {
                    holds = false;
                    break 'outer;
                }
            }
        }
        product *= pc.r();
        cycles.push(CycleReport {
            cycle: cyc.iter().map(|&k| k + 1).collect(),
            composite: comp.descriptor().to_string(),
            r: pc.r(),
            reduction_holds: holds,
        });
    }
    let pass = part.r() == product && cycles.iter().all(|c| c.reduction_holds);
    Ok(ProductTwistReport {
        group: g.label().to_string(),
        n,
        sigma: crate::automorphisms::perm_cycles(sigma),
        r: part.r(),
        cycles,
        product_of_cycle_r: product,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DisplayedMapResult {
    pub alpha: u32,
    pub is_homomorphism: bool,
    /// First `(x, y)` with `f(xy) != f(x) f(y)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<(String, String)>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Borel2Report {
    pub p: u32,
    pub order: usize,
    pub r_identity: usize,
    pub conjugacy_classes: usize,
    /// `[[a,b],[0,1/a]] -> [[1/a, alpha b/a^2],[0,a]]` for each alpha.
    pub displayed_maps: Vec<DisplayedMapResult>,
    /// True iff no displayed map is a homomorphism over this field.
    pub displayed_form_excluded: bool,
    /// `R` of conjugation by `diag(alpha, 1)` for each alpha.
    pub torus_normalised_r: Vec<(u32, usize)>,
    pub min_r: usize,
}

/// Analysis of `B_2(F_p) = U x| T` (upper triangular, determinant one).
pub fn borel2_analysis(p: u32, cap: usize) -> Result<Borel2Report> {
    if p == 2 {
        return Err(Error::Parse("borel analysis needs an odd prime".into()));
    }
    let f = PrimeField::new(p)?;
    let b: GroupRef = Arc::new(classical_matrix_group(ClassicalKind::Borel2, 2, p, cap)?);
    let id = AutTable::identity(b.clone());
    let r_identity = reidemeister(&id).r();
    let conjugacy_classes = conjugacy_class_count(b.as_ref());
    let mut displayed_maps = Vec::new();
    let mut rs = Vec::new();
    for alpha in 1..p {
        let image: Result<Vec<u32>> = (0..b.order())
            .map(|x| {
                let m = b.element_matrix(x).unwrap();
                let (a, bb) = (m.get(0, 0), m.get(0, 1));
                let ai = f.inv_raw(a)?;
                let top = f.mul_raw(alpha, f.mul_raw(f.mul_raw(ai, ai), bb));
                let img = GroupElement::from_rows(f, &[vec![ai as i64, top as i64], vec![0, a as i64]])?;
                Ok(b.index_of_matrix(&img).ok_or(Error::OutsideDomain)? as u32)
            })
            .collect();
        let image = image?;
        let mut counterexample = None;
        'search: for x in 0..b.order() {
            for y in 0..b.order() {
                let lhs = image[b.mul(x, y)] as usize;
                let rhs = b.mul(image[x] as usize, image[y] as usize);
                if lhs != rhs {
                    counterexample = Some((b.describe(x), b.describe(y)));
                    break 'search;
                }
            }
        }
        let is_hom = counterexample.is_none();
        let r = if is_hom {
            let name = format!("displayed map alpha={alpha}");
            let t = AutTable::new(b.clone(), Automorphism::TableMap { name, image: Arc::new(image) })?;
            Some(reidemeister(&t).r())
        } else {
            None
        };
        displayed_maps.push(DisplayedMapResult { alpha, is_homomorphism: is_hom, counterexample, r });
        let conj = GroupElement::diagonal(f, &[alpha as i64, 1]);
        let t = AutTable::new(b.clone(), Automorphism::Conjugation(conj))?;
        rs.push((alpha, reidemeister(&t).r()));
    }
    let min_r = rs
        .iter()
        .map(|x| x.1)
        .chain(displayed_maps.iter().filter_map(|d| d.r))
        .min()
        .unwrap_or(r_identity);
    Ok(Borel2Report {
        p,
        order: b.order(),
        r_identity,
        conjugacy_classes,
        displayed_form_excluded: displayed_maps.iter().all(|d| !d.is_homomorphism),
        displayed_maps,
        torus_normalised_r: rs,
        min_r,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ShadowReport {
    pub name: String,
    pub p: u32,
    #[serde(rename = "R")]
    pub r: usize,
    pub factor_r: Vec<usize>,
    /// `R` of the product automorphism equals the product of factor values.
    pub multiplicative: bool,
    pub note: String,
}

fn shadow_product(
    name: &str,
    p: u32,
    factors: Vec<(GroupRef, Automorphism)>,
    cap: usize,
    note: &str,
) -> Result<ShadowReport> {
    let groups: Vec<GroupRef> = factors.iter().map(|(g, _)| g.clone()).collect();
    let factor_r: Vec<usize> = factors
        .iter()
        .map(|(g, a)| Ok(reidemeister(&AutTable::new(g.clone(), a.clone())?).r()))
        .collect::<Result<_>>()?;
    let pg: GroupRef = Arc::new(ProductGroup::new(groups, cap)?);
    let sigma: Vec<usize> = (0..factors.len()).collect();
    let twist = Automorphism::ProductTwist { factors: factors.into_iter().map(|x| x.1).collect(), sigma };
    let r = reidemeister(&AutTable::new(pg, twist)?).r();
    Ok(ShadowReport {
        name: name.into(),
        p,
        r,
        multiplicative: r == factor_r.iter().product::<usize>(),
        factor_r,
        note: note.into(),
    })
}

/// `G_a x G_m` over GF(p) with `(x, y) -> (alpha x, y^{-1})`, alpha a
/// primitive root. Over GF(p) the second factor contributes the square
/// classes, so `R = 2` for odd p.
pub fn additive_multiplicative_shadow(p: u32, cap: usize) -> Result<ShadowReport> {
    let f = PrimeField::new(p)?;
    let alpha = f.primitive_root().value() as i64;
    let ga = classical(ClassicalKind::Unitriangular, 2, p, cap)?;
    let gm = classical(ClassicalKind::Diagonal, 1, p, cap)?;
    let scale = Automorphism::Conjugation(GroupElement::diagonal(f, &[alpha, 1]));
    shadow_product(
        "G_a x G_m",
        p,
        vec![(ga, scale), (gm, Automorphism::DiagonalInverse)],
        cap,
        "finite-field shadow: inversion on GF(p)^x has the square classes as twisted classes",
    )
}

/// `D_l x U_n` with `(s, u) -> (s^{-1}, d u d^{-1})`.
pub fn diagonal_unipotent_shadow(l: usize, d: &[i64], p: u32, cap: usize) -> Result<ShadowReport> {
    let f = PrimeField::new(p)?;
    let dl = classical(ClassicalKind::Diagonal, l, p, cap)?;
    let un = classical(ClassicalKind::Unitriangular, d.len(), p, cap)?;
    let conj = Automorphism::Conjugation(GroupElement::diagonal(f, d));
    shadow_product(
        "D_l x U_n",
        p,
        vec![(dl, Automorphism::DiagonalInverse), (un, conj)],
        cap,
        "finite-field shadow: the diagonal factor contributes 2^l square classes",
    )
}

/// Componentwise square-class check for inversion on `D_n(F_p)`.
pub fn diagonal_inverse_check(n: usize, p: u32, cap: usize) -> Result<CheckReport> {
    let g = classical(ClassicalKind::Diagonal, n, p, cap)?;
    let t = AutTable::new(g.clone(), Automorphism::DiagonalInverse)?;
    let part = reidemeister(&t);
    let f = PrimeField::new(p)?;
    let mut rep = CheckReport::new(format!("diag-inverse on D_{n}(F_{p})"));
    let square_class = |x: usize| -> Vec<bool> {
        g.element_matrix(x)
            .unwrap()
            .diagonal_entries()
            .iter()
            .map(|&v| f.elem(v as i64).is_square())
            .collect()
    };
    let expected_r = if p == 2 { 1 } else { 1usize << n };
    rep.record(part.r() == expected_r, || format!("R = {}, expected {expected_r}", part.r()));
    for x in 0..g.order() {
        for y in 0..g.order() {
            let same = part.same_class(x, y) == (square_class(x) == square_class(y));
            rep.record(same, || format!("{} vs {}", g.describe(x), g.describe(y)));
        }
    }
    let id_class = twisted_class(&t, g.identity());
    let squares: Vec<usize> = (0..g.order()).filter(|&x| square_class(x).iter().all(|&b| b)).collect();
    rep.record(id_class == squares, || "class of the identity is not the squares".into());
    Ok(rep)
}
