//! Finite groups with elements addressed by dense indices.
//!
//! Every concrete group sorts its elements by canonical encoding, so index
//! order is encoding order and the smallest index in a set is its
//! encoding-minimal member.

use std::any::Any;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::GroupElement;
use crate::scalars::PrimeField;

/// Default cap on enumerated group size.
pub const DEFAULT_CAP: usize = 2_000_000;

/// A finite group whose elements are `0..order()`.
pub trait IndexedGroup: Send + Sync {
    fn label(&self) -> &str;
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    fn generators(&self) -> &[usize];
    /// Human-readable form of an element, used in reports.
    fn describe(&self, a: usize) -> String;

    /// Matrix realisation of an element, if the group has one.
    fn element_matrix(&self, _a: usize) -> Option<GroupElement> {
        None
    }

    /// Index of a matrix in the group, if the group is matrix-realised.
    fn index_of_matrix(&self, _m: &GroupElement) -> Option<usize> {
        None
    }

    fn as_any(&self) -> &dyn Any;
}

pub type GroupRef = Arc<dyn IndexedGroup>;

/// Breadth-first closure of `generators` under right multiplication.
pub fn enumerate_matrices(generators: &[GroupElement], cap: usize) -> Result<Vec<GroupElement>> {
    let first = generators.first().ok_or_else(|| Error::Parse("no generators".into()))?;
    let id = GroupElement::identity(first.field(), first.dim());
    let mut seen: HashSet<GroupElement> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = x.mul(s);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap, partial: seen.len() });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<GroupElement> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// An enumerated group of invertible matrices over GF(p).
#[derive(Debug)]
pub struct FiniteGroup {
    label: String,
    field: PrimeField,
    dim: usize,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    inverse: Vec<u32>,
    generator_matrices: Vec<GroupElement>,
    generators: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn from_generators(label: impl Into<String>, generators: Vec<GroupElement>, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::Parse("enumeration cap must be at least 1".into()));
        }
        for g in &generators {
            if g.determinant() == 0 {
                return Err(Error::NotInvertible);
            }
        }
        let elements = enumerate_matrices(&generators, cap)?;
        let first = &generators[0];
        let (field, dim) = (first.field(), first.dim());
        let index: HashMap<GroupElement, u32> =
            elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let identity = index[&GroupElement::identity(field, dim)] as usize;
        let mut inverse = vec![u32::MAX; elements.len()];
        for (i, e) in elements.iter().enumerate() {
            if inverse[i] != u32::MAX {
                continue;
            }
            let j = index[&e.inverse()?];
            inverse[i] = j;
            inverse[j as usize] = i as u32;
        }
        let gens = generators.iter().map(|g| index[g] as usize).collect();
        Ok(Self {
            label: label.into(),
            field,
            dim,
            elements,
            index,
            inverse,
            generator_matrices: generators,
            generators: gens,
            identity,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, a: usize) -> &GroupElement {
        &self.elements[a]
    }

    pub fn generator_matrices(&self) -> &[GroupElement] {
        &self.generator_matrices
    }

    pub fn index_of(&self, m: &GroupElement) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    pub fn contains(&self, m: &GroupElement) -> bool {
        self.index.contains_key(m)
    }
}

impl IndexedGroup for FiniteGroup {
    fn label(&self) -> &str {
        &self.label
    }

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].mul(&self.elements[b]);
        self.index[&m] as usize
    }

    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn describe(&self, a: usize) -> String {
        self.elements[a].to_string()
    }

    fn element_matrix(&self, a: usize) -> Option<GroupElement> {
        Some(self.elements[a].clone())
    }

    fn index_of_matrix(&self, m: &GroupElement) -> Option<usize> {
        self.index_of(m)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Closure of a set of elements under multiplication (a subgroup, since the
/// group is finite). Returned sorted.
pub fn subgroup_closure(g: &dyn IndexedGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let id = g.identity();
    seen[id] = true;
    let mut queue = VecDeque::from([id]);
    let mut out = vec![id];
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// True iff `set` contains the identity and is closed under products.
pub fn is_subgroup(g: &dyn IndexedGroup, set: &[usize]) -> bool {
    let members: HashSet<usize> = set.iter().copied().collect();
    members.contains(&g.identity())
        && set.iter().all(|&a| set.iter().all(|&b| members.contains(&g.mul(a, b))))
}

/// True iff `set` is stable under conjugation by every generator.
pub fn is_normal(g: &dyn IndexedGroup, set: &[usize]) -> bool {
    let members: HashSet<usize> = set.iter().copied().collect();
    g.generators().iter().all(|&s| {
        let si = g.inv(s);
        set.iter().all(|&n| members.contains(&g.mul(g.mul(s, n), si)))
    })
}

/// Centre of the group, by exhaustive commutation with the generators.
pub fn center(g: &dyn IndexedGroup) -> Vec<usize> {
    (0..g.order())
        .filter(|&z| g.generators().iter().all(|&s| g.mul(s, z) == g.mul(z, s)))
        .collect()
}

/// Quotient `G / N` by a normal subgroup. Each coset is represented by its
/// smallest member, and cosets are ordered by representative.
pub struct CosetGroup {
    label: String,
    parent: GroupRef,
    subgroup: Vec<usize>,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
    generators: Vec<usize>,
}

impl CosetGroup {
    pub fn new(label: impl Into<String>, parent: GroupRef, subgroup: Vec<usize>) -> Result<Self> {
        let mut subgroup = subgroup;
        subgroup.sort_unstable();
        subgroup.dedup();
        if !is_subgroup(parent.as_ref(), &subgroup) {
            return Err(Error::Parse("quotient by a non-subgroup".into()));
        }
        if !is_normal(parent.as_ref(), &subgroup) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![u32::MAX; parent.order()];
        let mut reps = Vec::new();
        for x in 0..parent.order() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &n in &subgroup {
                coset_of[parent.mul(x, n)] = c;
            }
        }
        let mut generators: Vec<usize> =
            parent.generators().iter().map(|&g| coset_of[g] as usize).collect();
        generators.dedup();
        Ok(Self { label: label.into(), parent, subgroup, coset_of, reps, generators })
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    /// The projection `G -> G/N`.
    pub fn project(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }

    pub fn representative(&self, c: usize) -> usize {
        self.reps[c]
    }
}

impl IndexedGroup for CosetGroup {
    fn label(&self) -> &str {
        &self.label
    }

    fn order(&self) -> usize {
        self.reps.len()
    }

    fn identity(&self) -> usize {
        self.project(self.parent.identity())
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.project(self.parent.mul(self.reps[a], self.reps[b]))
    }

    fn inv(&self, a: usize) -> usize {
        self.project(self.parent.inv(self.reps[a]))
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn describe(&self, a: usize) -> String {
        self.parent.describe(self.reps[a])
    }

    fn element_matrix(&self, a: usize) -> Option<GroupElement> {
        self.parent.element_matrix(self.reps[a])
    }

    fn index_of_matrix(&self, m: &GroupElement) -> Option<usize> {
        self.parent.index_of_matrix(m).map(|x| self.project(x))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Direct product `G_1 x .. x G_n`; element index is mixed-radix with the
/// first factor most significant, so index order is lexicographic.
pub struct ProductGroup {
    label: String,
    factors: Vec<GroupRef>,
    orders: Vec<usize>,
    order: usize,
    generators: Vec<usize>,
}

impl ProductGroup {
    pub fn new(factors: Vec<GroupRef>, cap: usize) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse("empty product".into()));
        }
        let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
        let mut order = 1usize;
        for &o in &orders {
            order = order.checked_mul(o).filter(|&v| v <= cap).ok_or(Error::CapExceeded {
                cap,
                partial: order,
            })?;
        }
        let label = factors.iter().map(|f| f.label().to_string()).collect::<Vec<_>>().join(" x ");
        let mut pg = Self { label, factors, orders, order, generators: Vec::new() };
        let ids: Vec<usize> = pg.factors.iter().map(|f| f.identity()).collect();
        let mut gens = Vec::new();
        for (k, f) in pg.factors.iter().enumerate() {
            for &s in f.generators() {
                let mut t = ids.clone();
                t[k] = s;
                gens.push(pg.encode(&t));
            }
        }
        pg.generators = gens;
        Ok(pg)
    }

    /// `G^n`.
    pub fn power(g: GroupRef, n: usize, cap: usize) -> Result<Self> {
        let mut pg = Self::new(vec![g.clone(); n], cap)?;
        pg.label = format!("({})^{}", g.label(), n);
        Ok(pg)
    }

    pub fn factors(&self) -> &[GroupRef] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.orders).fold(0, |acc, (&c, &o)| acc * o + c)
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.orders.len()];
        for k in (0..self.orders.len()).rev() {
            out[k] = x % self.orders[k];
            x /= self.orders[k];
        }
        out
    }
}

impl IndexedGroup for ProductGroup {
    fn label(&self) -> &str {
        &self.label
    }

    fn order(&self) -> usize {
        self.order
    }

    fn identity(&self) -> usize {
        let ids: Vec<usize> = self.factors.iter().map(|f| f.identity()).collect();
        self.encode(&ids)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (xa, xb) = (self.decode(a), self.decode(b));
        let prod: Vec<usize> =
            self.factors.iter().enumerate().map(|(k, f)| f.mul(xa[k], xb[k])).collect();
        self.encode(&prod)
    }

    fn inv(&self, a: usize) -> usize {
        let xa = self.decode(a);
        let inv: Vec<usize> = self.factors.iter().enumerate().map(|(k, f)| f.inv(xa[k])).collect();
        self.encode(&inv)
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn describe(&self, a: usize) -> String {
        let parts: Vec<String> =
            self.decode(a).iter().enumerate().map(|(k, &x)| self.factors[k].describe(x)).collect();
        format!("({})", parts.join(", "))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}
