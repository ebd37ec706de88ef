//! Finite group instances: adjoint Chevalley groups built from divided powers
//! of ad-matrices, and explicit classical matrix groups.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{center, CosetGroup, FiniteGroup, GroupRef, IndexedGroup};
use crate::liealgebra::ChevalleyBasis;
use crate::matrix::GroupElement;
use crate::report::CheckReport;
use crate::rootsystem::{Root, RootSystem};
use crate::scalars::{FieldElement, PrimeField};

/// The adjoint Chevalley group of a root system over GF(p), realised on the
/// Chevalley basis of its Lie algebra.
#[derive(Debug, Clone)]
pub struct ChevalleyGroup {
    cb: ChevalleyBasis,
    field: PrimeField,
    // divided powers ad(e_a)^k / k! reduced mod p, per root index
    divided: Vec<Vec<GroupElement>>,
}

impl ChevalleyGroup {
    pub fn new(cb: &ChevalleyBasis, field: PrimeField) -> Result<Self> {
        let nroots = cb.root_system().roots().len();
        let divided = (0..nroots)
            .map(|a| {
                Ok(cb
                    .divided_powers(a)?
                    .iter()
                    .map(|m| GroupElement::from_int(field, m))
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cb: cb.clone(), field, divided })
    }

    pub fn basis(&self) -> &ChevalleyBasis {
        &self.cb
    }

    pub fn root_system(&self) -> &RootSystem {
        self.cb.root_system()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.cb.dim()
    }

    pub fn label(&self) -> String {
        format!("{}-adjoint-p{}", self.root_system().label(), self.field.modulus())
    }

    fn root_index(&self, alpha: &Root) -> Result<usize> {
        self.root_system().index_of(alpha).ok_or_else(|| Error::NotARoot(alpha.0.clone()))
    }

    /// `x_a(t) = sum_k t^k ad(e_a)^k / k!` by root index.
    pub fn x_by_index(&self, a: usize, t: u32) -> GroupElement {
        let f = self.field;
        let dim = self.dim();
        let mut out = GroupElement::identity(f, dim);
        let mut tk = 1u32;
        for dp in self.divided[a].iter().skip(1) {
            tk = f.mul_raw(tk, t);
            if tk == 0 {
                break;
            }
            for i in 0..dim {
                for j in 0..dim {
                    let v = dp.get(i, j);
                    if v != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add_raw(cur, f.mul_raw(tk, v)));
                    }
                }
            }
        }
        out
    }

    pub fn x_alpha(&self, alpha: &Root, t: FieldElement) -> Result<GroupElement> {
        self.check_field(t)?;
        Ok(self.x_by_index(self.root_index(alpha)?, t.value()))
    }

    fn check_field(&self, t: FieldElement) -> Result<()> {
        if t.field() != self.field {
            return Err(Error::ModulusMismatch(t.field().modulus(), self.field.modulus()));
        }
        Ok(())
    }

    fn neg_index(&self, a: usize) -> usize {
        let np = self.root_system().num_positive();
        if a < np {
            a + np
        } else {
            a - np
        }
    }

    /// `n_a(t) = x_a(t) x_{-a}(-t^{-1}) x_a(t)`.
    pub fn n_by_index(&self, a: usize, t: u32) -> Result<GroupElement> {
        let f = self.field;
        let tinv = f.inv_raw(t)?;
        let xa = self.x_by_index(a, t);
        Ok(xa.mul(&self.x_by_index(self.neg_index(a), f.neg_raw(tinv))).mul(&xa))
    }

    /// `h_a(t) = n_a(t) n_a(-1)`.
    pub fn h_by_index(&self, a: usize, t: u32) -> Result<GroupElement> {
        let minus_one = self.field.neg_raw(1);
        Ok(self.n_by_index(a, t)?.mul(&self.n_by_index(a, minus_one)?))
    }

    pub fn n_alpha(&self, alpha: &Root, t: FieldElement) -> Result<GroupElement> {
        self.check_field(t)?;
        self.n_by_index(self.root_index(alpha)?, t.value())
    }

    pub fn h_alpha(&self, alpha: &Root, t: FieldElement) -> Result<GroupElement> {
        self.check_field(t)?;
        self.h_by_index(self.root_index(alpha)?, t.value())
    }

    /// `prod_i h_{alpha_i}(t_i)` over the simple roots.
    pub fn torus_element(&self, ts: &[u32]) -> Result<GroupElement> {
        let rs = self.root_system();
        if ts.len() != rs.rank() {
            return Err(Error::Parse(format!("expected {} torus coordinates", rs.rank())));
        }
        let mut out = GroupElement::identity(self.field, self.dim());
        for (i, &t) in ts.iter().enumerate() {
            let a = rs.index_of(&rs.simple_root(i)).unwrap();
            out = out.mul(&self.h_by_index(a, t)?);
        }
        Ok(out)
    }

    /// Generators `x_{+-alpha_i}(1)`; over a prime field these generate the group.
    pub fn generators(&self) -> Vec<GroupElement> {
        let rs = self.root_system();
        let np = rs.num_positive();
        let mut out = Vec::new();
        for i in 0..rs.rank() {
            let a = rs.index_of(&rs.simple_root(i)).unwrap();
            out.push(self.x_by_index(a, 1));
            out.push(self.x_by_index(a + np, 1));
        }
        out
    }

    pub fn enumerate(&self, cap: usize) -> Result<FiniteGroup> {
        FiniteGroup::from_generators(self.label(), self.generators(), cap)
    }

    /// `U = <x_a(1) : a > 0>`.
    pub fn unipotent_subgroup(&self, cap: usize) -> Result<FiniteGroup> {
        let np = self.root_system().num_positive();
        let gens = (0..np).map(|a| self.x_by_index(a, 1)).collect();
        FiniteGroup::from_generators(format!("U({})", self.label()), gens, cap)
    }

    /// `<x_a(1), x_{-a}(1)>`.
    pub fn rank_one_subgroup(&self, alpha: &Root, cap: usize) -> Result<FiniteGroup> {
        let a = self.root_index(alpha)?;
        FiniteGroup::from_generators(
            format!("<X_{alpha}, X_-{alpha}>({})", self.label()),
            vec![self.x_by_index(a, 1), self.x_by_index(self.neg_index(a), 1)],
            cap,
        )
    }

    /// `x_a(s) x_a(t) = x_a(s + t)` for every root and all `s, t`.
    pub fn additivity_check(&self) -> CheckReport {
        let f = self.field;
        let mut rep = CheckReport::new(format!("x_alpha additivity {}", self.label()));
        for a in 0..self.root_system().roots().len() {
            let xs: Vec<GroupElement> = (0..f.modulus()).map(|t| self.x_by_index(a, t)).collect();
            for s in 0..f.modulus() {
                for t in 0..f.modulus() {
                    let ok = xs[s as usize].mul(&xs[t as usize]) == xs[f.add_raw(s, t) as usize];
                    rep.record(ok, || format!("root {}, s={s}, t={t}", self.root_system().roots()[a]));
                }
            }
        }
        rep
    }

    /// `h_a(s) h_a(t) = h_a(st)` for every root and all nonzero `s, t`.
    pub fn multiplicativity_check(&self) -> Result<CheckReport> {
        let f = self.field;
        let p = f.modulus();
        let mut rep = CheckReport::new(format!("h_alpha multiplicativity {}", self.label()));
        for a in 0..self.root_system().roots().len() {
            let hs: Vec<GroupElement> =
                (1..p).map(|t| self.h_by_index(a, t)).collect::<Result<_>>()?;
            for s in 1..p {
                for t in 1..p {
                    let st = f.mul_raw(s, t);
                    let ok = hs[s as usize - 1].mul(&hs[t as usize - 1]) == hs[st as usize - 1];
                    rep.record(ok, || format!("root {}, s={s}, t={t}", self.root_system().roots()[a]));
                }
            }
        }
        Ok(rep)
    }

    /// `h_b(t) x_a(s) h_b(t)^{-1} = x_a(t^{<a,b>} s)` for `a > 0`, `b` simple.
    pub fn steinberg_conjugation_check(&self) -> Result<CheckReport> {
        let f = self.field;
        let p = f.modulus();
        let rs = self.root_system();
        let mut rep = CheckReport::new(format!("torus conjugation {}", self.label()));
        for i in 0..rs.rank() {
            let beta = rs.simple_root(i);
            let b = rs.index_of(&beta).unwrap();
            for t in 1..p {
                let h = self.h_by_index(b, t)?;
                let h_inv = h.inverse()?;
                for (a, alpha) in rs.positive_roots().iter().enumerate() {
                    let c = rs.pairing(alpha, &beta);
                    let tc = f.elem(t as i64).pow(c as i64)?.value();
                    for s in 0..p {
                        let lhs = self.x_by_index(a, s).conjugate_by(&h, &h_inv);
                        let rhs = self.x_by_index(a, f.mul_raw(tc, s));
                        rep.record(lhs == rhs, || format!("alpha={alpha}, beta={beta}, t={t}, s={s}"));
                    }
                }
            }
        }
        Ok(rep)
    }

    /// All three relation families together.
    pub fn relations_check(&self) -> Result<CheckReport> {
        let add = self.additivity_check();
        let mult = self.multiplicativity_check()?;
        let conj = self.steinberg_conjugation_check()?;
        let mut rep = CheckReport::new(format!("Chevalley relations {}", self.label()));
        rep = rep.merge(&add).merge(&mult).merge(&conj);
        Ok(rep)
    }
}

/// Kinds of explicit classical groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassicalKind {
    GL,
    SL,
    PSL,
    Diagonal,
    Unitriangular,
    Borel2,
}

impl ClassicalKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "GL" => Self::GL,
            "SL" => Self::SL,
            "PSL" => Self::PSL,
            "D" | "Diagonal" => Self::Diagonal,
            "U" | "Unitriangular" => Self::Unitriangular,
            "B2" | "Borel2" => Self::Borel2,
            _ => return None,
        })
    }
}

pub fn classical_label(kind: ClassicalKind, n: usize, p: u32) -> String {
    match kind {
        ClassicalKind::GL => format!("GL_{n}(F_{p})"),
        ClassicalKind::SL => format!("SL_{n}(F_{p})"),
        ClassicalKind::PSL => format!("PSL_{n}(F_{p})"),
        ClassicalKind::Diagonal => format!("D_{n}(F_{p})"),
        ClassicalKind::Unitriangular => format!("U_{n}(F_{p})"),
        ClassicalKind::Borel2 => format!("B_2(F_{p})"),
    }
}

fn transvections(f: PrimeField, n: usize) -> Vec<GroupElement> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(GroupElement::elementary(f, n, i, j, 1));
            }
        }
    }
    out
}

/// Enumerated classical matrix group as a concrete [`FiniteGroup`].
/// `PSL` is not a matrix group; use [`classical`] for it.
pub fn classical_matrix_group(kind: ClassicalKind, n: usize, p: u32, cap: usize) -> Result<FiniteGroup> {
    let f = PrimeField::new(p)?;
    if n == 0 {
        return Err(Error::Parse("matrix size must be positive".into()));
    }
    let g = f.primitive_root().value() as i64;
    let gens = match kind {
        ClassicalKind::GL => {
            let mut v = transvections(f, n);
            let mut d = vec![1i64; n];
            d[0] = g;
            v.push(GroupElement::diagonal(f, &d));
            v
        }
        ClassicalKind::SL => {
            if n == 1 {
                vec![GroupElement::identity(f, 1)]
            } else {
                transvections(f, n)
            }
        }
        ClassicalKind::Diagonal => (0..n)
            .map(|i| {
                let mut d = vec![1i64; n];
                d[i] = g;
                GroupElement::diagonal(f, &d)
            })
            .collect(),
        ClassicalKind::Unitriangular => {
            if n == 1 {
                vec![GroupElement::identity(f, 1)]
            } else {
                (0..n - 1).map(|i| GroupElement::elementary(f, n, i, i + 1, 1)).collect()
            }
        }
        ClassicalKind::Borel2 => {
            let ginv = f.inv_raw(g as u32)? as i64;
            vec![GroupElement::diagonal(f, &[g, ginv]), GroupElement::elementary(f, 2, 0, 1, 1)]
        }
        ClassicalKind::PSL => return Err(Error::Parse("PSL is a quotient group".into())),
    };
    let n_eff = if kind == ClassicalKind::Borel2 { 2 } else { n };
    FiniteGroup::from_generators(classical_label(kind, n_eff, p), gens, cap)
}

/// The named classical group over GF(p). PSL is the quotient of SL by its
/// scalar centre.
pub fn classical(kind: ClassicalKind, n: usize, p: u32, cap: usize) -> Result<GroupRef> {
    if kind == ClassicalKind::PSL {
        let sl: GroupRef = Arc::new(classical_matrix_group(ClassicalKind::SL, n, p, cap)?);
        let z = scalar_center(sl.as_ref());
        return Ok(Arc::new(CosetGroup::new(classical_label(kind, n, p), sl, z)?));
    }
    Ok(Arc::new(classical_matrix_group(kind, n, p, cap)?))
}

/// Scalar matrices in a matrix group.
pub fn scalar_center(g: &dyn IndexedGroup) -> Vec<usize> {
    let z: Vec<usize> = center(g)
        .into_iter()
        .filter(|&x| {
            g.element_matrix(x).map(|m| {
                m.is_diagonal() && m.diagonal_entries().windows(2).all(|w| w[0] == w[1])
            }) == Some(true)
        })
        .collect();
    z
}
