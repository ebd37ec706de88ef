//! Automorphism descriptors and their validated tabulations on enumerated
//! groups.

use std::fmt;
use std::sync::Arc;

use crate::chevgroup::ChevalleyGroup;
use crate::error::{Error, Result};
use crate::group::{CosetGroup, GroupRef, IndexedGroup, ProductGroup};
use crate::liealgebra::SignedLift;
use crate::matrix::GroupElement;
use crate::report::CheckReport;
use crate::rootsystem::DiagramAutomorphism;

/// A description of an automorphism. Descriptors are only trusted after
/// tabulation through [`AutTable::new`].
#[derive(Debug, Clone)]
pub enum Automorphism {
    Identity,
    /// `x -> g x g^{-1}` with `g` in the group.
    Inner(GroupElement),
    /// `x -> g x g^{-1}` with `g` a matrix normalising the group, possibly
    /// outside it (for example `phi_d` on `U_n`).
    Conjugation(GroupElement),
    /// The lift of a diagram automorphism, acting by conjugation with its
    /// signed permutation matrix.
    DiagramConj(DiagramConj),
    /// An explicit permutation of element indices.
    TableMap { name: String, image: Arc<Vec<u32>> },
    /// `diag(t_1..t_n) -> diag(t_1^{-1}..t_n^{-1})`.
    DiagonalInverse,
    /// `diag(t_1..t_n) -> diag(t_n, t_1, .., t_{n-2}, t_{n-1} t_n^{-r})`, `n >= 2`.
    DiagonalCycleTwist { r: u32 },
    /// `(g_j) -> (phi_j(g_{sigma^{-1}(j)}))` on `G_1 x .. x G_n`; `sigma[i]` is
    /// the 0-based image of `i`.
    ProductTwist { factors: Vec<Automorphism>, sigma: Vec<usize> },
    /// `a_1 o a_2 o .. o a_k` (the last is applied first).
    Compose(Vec<Automorphism>),
    /// The automorphism induced on a quotient `G/N`.
    Quotient(Box<Automorphism>),
}

/// Signed-permutation conjugation realising a lifted diagram automorphism.
#[derive(Debug, Clone)]
pub struct DiagramConj {
    lift: SignedLift,
    sigma: GroupElement,
    sigma_inv: GroupElement,
}

impl DiagramConj {
    pub fn new(cg: &ChevalleyGroup, rho: &DiagramAutomorphism) -> Result<Self> {
        let lift = cg.basis().lift_diagram_automorphism(rho)?;
        let sigma = GroupElement::from_int(cg.field(), &lift.matrix());
        let sigma_inv = sigma.inverse()?;
        Ok(Self { lift, sigma, sigma_inv })
    }

    pub fn lift(&self) -> &SignedLift {
        &self.lift
    }

    pub fn rho(&self) -> &DiagramAutomorphism {
        self.lift.rho()
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        x.conjugate_by(&self.sigma, &self.sigma_inv)
    }
}

impl Automorphism {
    pub fn diagram(cg: &ChevalleyGroup, rho: &DiagramAutomorphism) -> Result<Self> {
        Ok(Self::DiagramConj(DiagramConj::new(cg, rho)?))
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism::Compose(vec![self.clone(), other.clone()])
    }

    /// True if the descriptor acts on matrices without reference to a group.
    pub fn is_matrix_level(&self) -> bool {
        match self {
            Self::Identity
            | Self::Inner(_)
            | Self::Conjugation(_)
            | Self::DiagramConj(_)
            | Self::DiagonalInverse
            | Self::DiagonalCycleTwist { .. } => true,
            Self::Compose(v) => v.iter().all(|a| a.is_matrix_level()),
            Self::TableMap { .. } | Self::ProductTwist { .. } | Self::Quotient(_) => false,
        }
    }

    /// Image of a matrix under a matrix-level descriptor.
    pub fn apply_matrix(&self, x: &GroupElement) -> Result<GroupElement> {
        match self {
            Self::Identity => Ok(x.clone()),
            Self::Inner(g) | Self::Conjugation(g) => {
                check_dims(g, x)?;
                Ok(x.conjugate_by(g, &g.inverse()?))
            }
            Self::DiagramConj(d) => {
                check_dims(&d.sigma, x)?;
                Ok(d.apply(x))
            }
            Self::DiagonalInverse => {
                if !x.is_diagonal() {
                    return Err(Error::OutsideDomain);
                }
                x.inverse()
            }
            Self::DiagonalCycleTwist { r } => {
                if !x.is_diagonal() {
                    return Err(Error::OutsideDomain);
                }
                let t = x.diagonal_entries();
                let n = t.len();
                if n < 2 {
                    return Err(Error::DomainMismatch("cycle twist needs n >= 2".into()));
                }
                let f = x.field();
                let tn_r = f.elem(t[n - 1] as i64).pow(-(*r as i64))?.value();
                let mut out = Vec::with_capacity(n);
                out.push(t[n - 1] as i64);
                for &v in &t[..n - 2] {
                    out.push(v as i64);
                }
                out.push(f.mul_raw(t[n - 2], tn_r) as i64);
                Ok(GroupElement::diagonal(f, &out))
            }
            Self::Compose(v) => {
                let mut y = x.clone();
                for a in v.iter().rev() {
                    y = a.apply_matrix(&y)?;
                }
                Ok(y)
            }
            _ => Err(Error::DomainMismatch(format!("{self} needs an enumerated group"))),
        }
    }

    /// Image of element `x` of `group`.
    pub fn apply(&self, group: &dyn IndexedGroup, x: usize) -> Result<usize> {
        if x >= group.order() {
            return Err(Error::OutsideDomain);
        }
        match self {
            Self::Identity => Ok(x),
            Self::TableMap { image, .. } => {
                if image.len() != group.order() {
                    return Err(Error::DomainMismatch("table size differs from group order".into()));
                }
                Ok(image[x] as usize)
            }
            Self::ProductTwist { factors, sigma } => {
                let pg = downcast_product(group, factors.len())?;
                let coords = pg.decode(x);
                let inv = invert_perm(sigma)?;
                let mut out = vec![0; coords.len()];
                for j in 0..coords.len() {
                    out[j] = factors[j].apply(pg.factors()[j].as_ref(), coords[inv[j]])?;
                }
                Ok(pg.encode(&out))
            }
            Self::Quotient(inner) => {
                let q = group
                    .as_any()
                    .downcast_ref::<CosetGroup>()
                    .ok_or_else(|| Error::DomainMismatch("not a quotient group".into()))?;
                let y = inner.apply(q.parent().as_ref(), q.representative(x))?;
                Ok(q.project(y))
            }
            Self::Compose(v) if !self.is_matrix_level() => {
                let mut y = x;
                for a in v.iter().rev() {
                    y = a.apply(group, y)?;
                }
                Ok(y)
            }
            _ => {
                let m = group
                    .element_matrix(x)
                    .ok_or_else(|| Error::DomainMismatch(format!("{} is not matrix-realised", group.label())))?;
                let img = self.apply_matrix(&m)?;
                group.index_of_matrix(&img).ok_or(Error::OutsideDomain)
            }
        }
    }
}

fn check_dims(g: &GroupElement, x: &GroupElement) -> Result<()> {
    if g.dim() != x.dim() || g.field() != x.field() {
        return Err(Error::OutsideDomain);
    }
    Ok(())
}

fn downcast_product(group: &dyn IndexedGroup, arity: usize) -> Result<&ProductGroup> {
    let pg = group
        .as_any()
        .downcast_ref::<ProductGroup>()
        .ok_or_else(|| Error::DomainMismatch("product twist on a non-product group".into()))?;
    if pg.arity() != arity {
        return Err(Error::DomainMismatch(format!(
            "product twist of arity {arity} on a product of {} factors",
            pg.arity()
        )));
    }
    Ok(pg)
}

pub(crate) fn invert_perm(sigma: &[usize]) -> Result<Vec<usize>> {
    let mut inv = vec![usize::MAX; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        if s >= sigma.len() || inv[s] != usize::MAX {
            return Err(Error::Parse("sigma is not a permutation".into()));
        }
        inv[s] = i;
    }
    Ok(inv)
}

/// Cycle notation for a 0-based permutation, 1-based in the output.
pub fn perm_cycles(sigma: &[usize]) -> String {
    DiagramAutomorphism::from_images(sigma.to_vec()).map(|d| d.cycles()).unwrap_or_default()
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => write!(f, "identity"),
            Self::Inner(g) => write!(f, "inner({g})"),
            Self::Conjugation(g) => write!(f, "conj({g})"),
            Self::DiagramConj(d) => write!(f, "diagram{}", d.rho().cycles()),
            Self::TableMap { name, .. } => write!(f, "table({name})"),
            Self::DiagonalInverse => write!(f, "diag-inverse"),
            Self::DiagonalCycleTwist { r } => write!(f, "diag-cycle-twist:r={r}"),
            Self::ProductTwist { factors, sigma } => {
                let parts: Vec<String> = factors.iter().map(|a| a.to_string()).collect();
                write!(f, "product({}):sigma={}", parts.join(";"), perm_cycles(sigma))
            }
            Self::Compose(v) => {
                let parts: Vec<String> = v.iter().map(|a| a.to_string()).collect();
                write!(f, "compose({})", parts.join(","))
            }
            Self::Quotient(a) => write!(f, "induced({a})"),
        }
    }
}

/// An automorphism tabulated on an enumerated group and validated as a
/// bijective homomorphism.
#[derive(Clone)]
pub struct AutTable {
    group: GroupRef,
    descriptor: Automorphism,
    image: Arc<Vec<u32>>,
}

impl fmt::Debug for AutTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AutTable({} on {})", self.descriptor, self.group.label())
    }
}

impl AutTable {
    /// Tabulates and validates. Homomorphy is checked as
    /// `phi(x s) = phi(x) phi(s)` for every element `x` and generator `s`,
    /// which implies it for all pairs.
    pub fn new(group: GroupRef, descriptor: Automorphism) -> Result<Self> {
        let image = tabulate(group.as_ref(), &descriptor)?;
        let t = Self { group, descriptor, image: Arc::new(image) };
        t.validate()?;
        Ok(t)
    }

    pub fn identity(group: GroupRef) -> Self {
        let image = (0..group.order() as u32).collect();
        Self { group, descriptor: Automorphism::Identity, image: Arc::new(image) }
    }

    fn validate(&self) -> Result<()> {
        let g = self.group.as_ref();
        let mut hit = vec![false; g.order()];
        for &y in self.image.iter() {
            if std::mem::replace(&mut hit[y as usize], true) {
                return Err(Error::NotAutomorphism(format!("{} is not injective", self.descriptor)));
            }
        }
        for x in 0..g.order() {
            for &s in g.generators() {
                if self.apply(g.mul(x, s)) != g.mul(self.apply(x), self.apply(s)) {
                    return Err(Error::NotAutomorphism(format!(
                        "{} fails multiplicativity at ({}, {})",
                        self.descriptor,
                        g.describe(x),
                        g.describe(s)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn descriptor(&self) -> &Automorphism {
        &self.descriptor
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    /// `self o other`.
    pub fn compose(&self, other: &AutTable) -> Result<AutTable> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::DomainMismatch(format!(
                "{} vs {}",
                self.group.label(),
                other.group.label()
            )));
        }
        let image = other.image.iter().map(|&x| self.image[x as usize]).collect();
        Ok(Self {
            group: self.group.clone(),
            descriptor: self.descriptor.compose(&other.descriptor),
            image: Arc::new(image),
        })
    }

    pub fn inverse(&self) -> AutTable {
        let mut image = vec![0u32; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as u32;
        }
        let descriptor = match &self.descriptor {
            Automorphism::Identity => Automorphism::Identity,
            Automorphism::DiagonalInverse => Automorphism::DiagonalInverse,
            d => Automorphism::TableMap { name: format!("inverse of {d}"), image: Arc::new(image.clone()) },
        };
        Self { group: self.group.clone(), descriptor, image: Arc::new(image) }
    }

    /// `self o Int_g` for an element index `g`.
    pub fn compose_inner(&self, g: usize) -> AutTable {
        let grp = self.group.as_ref();
        let gi = grp.inv(g);
        let image: Vec<u32> = (0..grp.order()).map(|x| self.image[grp.mul(grp.mul(g, x), gi)]).collect();
        let name = format!("{} o Int({})", self.descriptor, grp.describe(g));
        let image = Arc::new(image);
        Self {
            group: self.group.clone(),
            descriptor: Automorphism::TableMap { name, image: image.clone() },
            image,
        }
    }

    /// Elements fixed by the automorphism, in index order.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.image.len()).filter(|&x| self.image[x] as usize == x).collect()
    }

    pub fn preserves(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.group.order()];
        for &x in set {
            member[x] = true;
        }
        set.iter().all(|&x| member[self.apply(x)])
    }

    /// The automorphism of `G/N` induced by `self`, checked to satisfy
    /// `phi_bar o pi = pi o phi` on every element.
    pub fn induced_quotient(&self, label: impl Into<String>, n: &[usize]) -> Result<(Arc<CosetGroup>, AutTable)> {
        let q = Arc::new(CosetGroup::new(label, self.group.clone(), n.to_vec())?);
        if !self.preserves(q.subgroup()) {
            return Err(Error::SubgroupNotInvariant);
        }
        let image: Vec<u32> =
            (0..q.order()).map(|c| q.project(self.apply(q.representative(c))) as u32).collect();
        for x in 0..self.group.order() {
            if q.project(self.apply(x)) != image[q.project(x)] as usize {
                return Err(Error::Internal("induced map is not well defined".into()));
            }
        }
        let qref: GroupRef = q.clone();
        let descriptor = Automorphism::Quotient(Box::new(self.descriptor.clone()));
        let table = Self { group: qref, descriptor, image: Arc::new(image) };
        table.validate()?;
        Ok((q, table))
    }
}

fn tabulate(group: &dyn IndexedGroup, descriptor: &Automorphism) -> Result<Vec<u32>> {
    if let Automorphism::ProductTwist { factors, sigma } = descriptor {
        // tabulate factors once, then combine coordinatewise
        let pg = downcast_product(group, factors.len())?;
        let tables: Vec<Vec<u32>> = factors
            .iter()
            .zip(pg.factors())
            .map(|(a, g)| tabulate(g.as_ref(), a))
            .collect::<Result<_>>()?;
        let inv = invert_perm(sigma)?;
        return Ok((0..pg.order())
            .map(|x| {
                let c = pg.decode(x);
                let out: Vec<usize> = (0..c.len()).map(|j| tables[j][c[inv[j]]] as usize).collect();
                pg.encode(&out) as u32
            })
            .collect());
    }
    if let Automorphism::Inner(g) = descriptor {
        if group.index_of_matrix(g).is_none() {
            return Err(Error::OutsideDomain);
        }
    }
    (0..group.order()).map(|x| descriptor.apply(group, x).map(|y| y as u32)).collect()
}

/// Report of the lifted diagram automorphism against the root-subgroup and
/// torus formulas.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DiagramConjReport {
    pub group: String,
    pub rho: String,
    /// `rho_bar(x_a(t)) = x_{rho a}(eps_a t)` for all roots and all `t`.
    pub root_subgroups: CheckReport,
    /// `rho_bar(h_a(t)) = h_{rho a}(t)` for all roots and units `t`.
    pub torus: CheckReport,
    /// `rho_bar(h_a(t)) = n_{rho a}(eps_a t) n_{rho a}(-eps_a)`.
    pub torus_word: CheckReport,
    /// `rho_bar(h_a(t)) = h_{rho a}(eps_a t)`, recorded as data: it fails
    /// whenever `eps_a = -1` and `h_{rho a}(-1) != 1`.
    pub torus_signed_literal: CheckReport,
    pub eps_one_on_simple: bool,
    pub pass: bool,
}

/// Exhaustive check of a lifted diagram automorphism in the adjoint group.
pub fn diagram_conj_check(cg: &ChevalleyGroup, rho: &DiagramAutomorphism) -> Result<DiagramConjReport> {
    let d = DiagramConj::new(cg, rho)?;
    let rs = cg.root_system();
    let f = cg.field();
    let p = f.modulus();
    let np = rs.num_positive();
    let roots = rs.roots();
    let label = cg.label();
    let mut xs = CheckReport::new(format!("diagram on root subgroups {label}"));
    let mut hs = CheckReport::new(format!("diagram on torus {label}"));
    let mut hw = CheckReport::new(format!("diagram on torus word {label}"));
    let mut hl = CheckReport::new(format!("diagram on torus, signed form {label}"));
    for (a, alpha) in roots.iter().enumerate() {
        let ra = rs.index_of(&rs.extend_to_roots(rho, alpha)?).unwrap();
        let eps = d.lift().epsilon(a);
        let signed = |t: u32| if eps < 0 { f.neg_raw(t) } else { t };
        for t in 0..p {
            let ok = d.apply(&cg.x_by_index(a, t)) == cg.x_by_index(ra, signed(t));
            xs.record(ok, || format!("alpha={alpha}, t={t}"));
        }
        for t in 1..p {
            let img = d.apply(&cg.h_by_index(a, t)?);
            hs.record(img == cg.h_by_index(ra, t)?, || format!("alpha={alpha}, t={t}"));
            let word = cg.n_by_index(ra, signed(t))?.mul(&cg.n_by_index(ra, signed(f.neg_raw(1)))?);
            hw.record(img == word, || format!("alpha={alpha}, t={t}"));
            hl.record(img == cg.h_by_index(ra, signed(t))?, || {
                format!("alpha={alpha}, eps={eps}, t={t}")
            });
        }
    }
    let eps_one_on_simple = (0..rs.rank()).all(|i| {
        let a = rs.index_of(&rs.simple_root(i)).unwrap();
        d.lift().epsilon(a) == 1 && d.lift().epsilon(a + np) == 1
    });
    let pass = xs.pass && hs.pass && hw.pass && eps_one_on_simple;
    Ok(DiagramConjReport {
        group: label,
        rho: rho.cycles(),
        root_subgroups: xs,
        torus: hs,
        torus_word: hw,
        torus_signed_literal: hl,
        eps_one_on_simple,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevgroup::{classical, classical_matrix_group, ClassicalKind};
    use crate::group::{center, DEFAULT_CAP};
    use crate::liealgebra::ChevalleyBasis;
    use crate::rootsystem::{Root, RootSystem};
    use crate::scalars::PrimeField;

    fn grp(kind: ClassicalKind, n: usize, p: u32) -> GroupRef {
        classical(kind, n, p, DEFAULT_CAP).unwrap()
    }

    fn chev(c: char, n: usize, p: u32) -> ChevalleyGroup {
        let rs = RootSystem::from_label(c, n).unwrap();
        ChevalleyGroup::new(&ChevalleyBasis::new(&rs).unwrap(), PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn inner_fixes_g() {
        let g = grp(ClassicalKind::SL, 2, 3);
        for x in 0..g.order() {
            let m = g.element_matrix(x).unwrap();
            let t = AutTable::new(g.clone(), Automorphism::Inner(m)).unwrap();
            assert_eq!(t.apply(x), x);
        }
    }

    #[test]
    fn diagonal_inverse_example() {
        let f = PrimeField::new(5).unwrap();
        let x = GroupElement::diagonal(f, &[2, 3]);
        let y = Automorphism::DiagonalInverse.apply_matrix(&x).unwrap();
        assert_eq!(y, GroupElement::diagonal(f, &[3, 2]));
        let g = grp(ClassicalKind::Diagonal, 2, 5);
        let t = AutTable::new(g, Automorphism::DiagonalInverse).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
        assert!(matches!(t.inverse().descriptor(), Automorphism::DiagonalInverse));
    }

    #[test]
    fn cycle_twist_is_automorphism() {
        for (n, p, r) in [(2, 5, 1), (3, 7, 2), (2, 3, 3)] {
            let g = grp(ClassicalKind::Diagonal, n, p);
            assert!(AutTable::new(g, Automorphism::DiagonalCycleTwist { r }).is_ok());
        }
        let g = grp(ClassicalKind::Diagonal, 1, 5);
        assert!(AutTable::new(g, Automorphism::DiagonalCycleTwist { r: 1 }).is_err());
    }

    #[test]
    fn non_homomorphism_rejected() {
        let g = grp(ClassicalKind::SL, 2, 3);
        let mut image: Vec<u32> = (0..g.order() as u32).collect();
        image.swap(1, 2);
        let d = Automorphism::TableMap { name: "swap".into(), image: Arc::new(image) };
        assert!(matches!(AutTable::new(g, d), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn outside_domain() {
        let g = grp(ClassicalKind::SL, 2, 3);
        let f = PrimeField::new(3).unwrap();
        let outside = GroupElement::diagonal(f, &[2, 1]);
        assert!(AutTable::new(g.clone(), Automorphism::Inner(outside)).is_err());
        assert!(AutTable::new(g, Automorphism::DiagonalInverse).is_err());
    }

    #[test]
    fn compose_inverse_laws() {
        let g = grp(ClassicalKind::SL, 2, 3);
        let a = g.element_matrix(5).unwrap();
        let b = g.element_matrix(11).unwrap();
        let ta = AutTable::new(g.clone(), Automorphism::Inner(a.clone())).unwrap();
        let tb = AutTable::new(g.clone(), Automorphism::Inner(b.clone())).unwrap();
        let tab = AutTable::new(g.clone(), Automorphism::Inner(a.mul(&b))).unwrap();
        assert_eq!(ta.compose(&tb).unwrap().images(), tab.images());
        assert!(ta.compose(&ta.inverse()).unwrap().is_identity());
        assert!(ta.inverse().compose(&ta).unwrap().is_identity());
        let other = grp(ClassicalKind::SL, 2, 3);
        assert!(matches!(ta.compose(&AutTable::identity(other)), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn product_twist_identity_sigma_is_coordinatewise() {
        let g = grp(ClassicalKind::Diagonal, 1, 7);
        let pg: GroupRef = Arc::new(ProductGroup::power(g.clone(), 2, DEFAULT_CAP).unwrap());
        let d = Automorphism::ProductTwist {
            factors: vec![Automorphism::DiagonalInverse, Automorphism::Identity],
            sigma: vec![0, 1],
        };
        let t = AutTable::new(pg.clone(), d).unwrap();
        let inv = AutTable::new(g.clone(), Automorphism::DiagonalInverse).unwrap();
        let prod = pg.as_any().downcast_ref::<ProductGroup>().unwrap();
        for x in 0..pg.order() {
            let c = prod.decode(x);
            assert_eq!(prod.decode(t.apply(x)), vec![inv.apply(c[0]), c[1]]);
        }
    }

    #[test]
    fn product_twist_swap() {
        let g = grp(ClassicalKind::SL, 2, 3);
        let pg: GroupRef = Arc::new(ProductGroup::power(g, 2, DEFAULT_CAP).unwrap());
        let d = Automorphism::ProductTwist {
            factors: vec![Automorphism::Identity, Automorphism::Identity],
            sigma: vec![1, 0],
        };
        let t = AutTable::new(pg.clone(), d).unwrap();
        let prod = pg.as_any().downcast_ref::<ProductGroup>().unwrap();
        let x = prod.encode(&[3, 7]);
        assert_eq!(prod.decode(t.apply(x)), vec![7, 3]);
    }

    #[test]
    fn induced_on_psl() {
        let sl = grp(ClassicalKind::SL, 2, 3);
        let z = center(sl.as_ref());
        let g = sl.element_matrix(7).unwrap();
        let t = AutTable::new(sl.clone(), Automorphism::Inner(g)).unwrap();
        let (q, tq) = t.induced_quotient("PSL", &z).unwrap();
        assert_eq!(q.order(), 12);
        for x in 0..sl.order() {
            assert_eq!(q.project(t.apply(x)), tq.apply(q.project(x)));
        }
        let (_, triv) = t.induced_quotient("same", &[sl.identity()]).unwrap();
        assert_eq!(triv.images(), t.images());
    }

    #[test]
    fn induced_diag_inverse_on_square_classes() {
        let d2: GroupRef = Arc::new(classical_matrix_group(ClassicalKind::Diagonal, 2, 5, DEFAULT_CAP).unwrap());
        let squares: Vec<usize> = (0..d2.order()).map(|x| d2.mul(x, x)).collect();
        let t = AutTable::new(d2, Automorphism::DiagonalInverse).unwrap();
        let (q, tq) = t.induced_quotient("D2/squares", &squares).unwrap();
        assert_eq!(q.order(), 4);
        assert!(tq.is_identity());
    }

    #[test]
    fn non_invariant_subgroup_rejected() {
        let d2: GroupRef = Arc::new(classical_matrix_group(ClassicalKind::Diagonal, 2, 5, DEFAULT_CAP).unwrap());
        let f = PrimeField::new(5).unwrap();
        // first coordinate subgroup, moved by the cycle twist
        let first: Vec<usize> = (0..d2.order())
            .filter(|&x| d2.element_matrix(x).unwrap().get(1, 1) == 1)
            .collect();
        let t = AutTable::new(d2, Automorphism::DiagonalCycleTwist { r: 1 }).unwrap();
        assert!(matches!(t.induced_quotient("q", &first), Err(Error::SubgroupNotInvariant)));
        let _ = f;
    }

    #[test]
    fn a2_diagram_maps_x1_to_x2() {
        let cg = chev('A', 2, 5);
        let rho = DiagramAutomorphism::from_cycles(2, "(1 2)").unwrap();
        let d = Automorphism::diagram(&cg, &rho).unwrap();
        let f = cg.field();
        for t in f.elements() {
            let x1 = cg.x_alpha(&Root(vec![1, 0]), t).unwrap();
            let x2 = cg.x_alpha(&Root(vec![0, 1]), t).unwrap();
            assert_eq!(d.apply_matrix(&x1).unwrap(), x2);
        }
    }

    #[test]
    fn diagram_check_a2_and_triality() {
        let cg = chev('A', 2, 5);
        let rho = DiagramAutomorphism::from_cycles(2, "(1 2)").unwrap();
        let rep = diagram_conj_check(&cg, &rho).unwrap();
        assert!(rep.pass, "{rep:?}");
        // eps = -1 on alpha_1 + alpha_2, and h(-1) acts nontrivially there
        assert!(!rep.torus_signed_literal.pass);

        let cg = chev('D', 4, 3);
        let rho = DiagramAutomorphism::from_cycles(4, "(1 3 4)").unwrap();
        assert!(diagram_conj_check(&cg, &rho).unwrap().pass);

        let id = DiagramAutomorphism::identity(2);
        let cg = chev('A', 2, 3);
        let rep = diagram_conj_check(&cg, &id).unwrap();
        assert!(rep.pass && rep.torus_signed_literal.pass);
    }

    #[test]
    fn diagram_on_enumerated_group() {
        let cg = chev('A', 2, 2);
        let g: GroupRef = Arc::new(cg.enumerate(DEFAULT_CAP).unwrap());
        assert_eq!(g.order(), 168);
        let rho = DiagramAutomorphism::from_cycles(2, "(1 2)").unwrap();
        let t = AutTable::new(g, Automorphism::diagram(&cg, &rho).unwrap()).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
    }
}
