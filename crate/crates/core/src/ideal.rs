//! Ideal-level algebra on top of the basis engine: quotient, saturation,
//! elimination, implicitization, specialization, and colength at the origin or
//! globally.

use num::Zero;

use crate::basis::{
    groebner_basis, module_kernel, normal_form, staircase_count, standard_basis, Basis, Budget,
    ModElem,
};
use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::{Poly, Rat, Ring};

/// Where a colength is measured: only the component at the origin (via a local
/// standard basis) or summed over all points of the vanishing locus (via a
/// global Groebner basis).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColengthMode {
    AtOrigin,
    Global,
}

/// An ideal in a named polynomial ring, held by its generator list. The zero
/// ideal is represented by a single zero generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub ring: Ring,
    pub gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Poly>) -> Self {
        let mut gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            gens.push(Poly::zero(ring.nvars()));
        }
        Ideal { ring, gens }
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// Generators of `self` followed by those of `other` (ideal sum).
    pub fn plus(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn plus_poly(&self, p: &Poly) -> Ideal {
        let mut gens = self.gens.clone();
        gens.push(p.clone());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn groebner(&self, order: &MonomialOrder, budget: &mut Budget) -> Result<Basis> {
        groebner_basis(&self.gens, order, budget)
    }

    pub fn standard(&self, order: &MonomialOrder, budget: &mut Budget) -> Result<Basis> {
        standard_basis(&self.gens, order, budget)
    }

    /// Equality as ideals, decided by comparing reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal, budget: &mut Budget) -> Result<bool> {
        let a = self.groebner(&MonomialOrder::DegRevLex, budget)?;
        let b = other.groebner(&MonomialOrder::DegRevLex, budget)?;
        Ok(a.gens == b.gens)
    }

    /// Membership of a polynomial via zero normal form.
    pub fn contains_poly(&self, p: &Poly, budget: &mut Budget) -> Result<bool> {
        let b = self.groebner(&MonomialOrder::DegRevLex, budget)?;
        Ok(normal_form(p, &b, budget)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, budget: &mut Budget) -> Result<bool> {
        let b = self.groebner(&MonomialOrder::DegRevLex, budget)?;
        for g in &other.gens {
            if !normal_form(g, &b, budget)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Intersection with another ideal via the auxiliary-variable trick:
    /// eliminate w from w*I + (1-w)*J.
    pub fn intersect(&self, other: &Ideal, budget: &mut Budget) -> Result<Ideal> {
        assert_eq!(self.ring, other.ring);
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let n = self.ring.nvars();
        let ext = self.ring.extended("@w");
        let map: Vec<Option<usize>> = (0..n).map(Some).collect();
        let w = Poly::var(n + 1, n);
        let one_minus_w = Poly::one(n + 1).sub(&w);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.map_vars(n + 1, &map).mul(&w));
        }
        for g in &other.gens {
            gens.push(g.map_vars(n + 1, &map).mul(&one_minus_w));
        }
        let aux = Ideal::new(ext, gens);
        let eliminated = aux.eliminate(&[n], budget)?;
        // the eliminated ring equals the original ring
        Ok(Ideal::new(self.ring.clone(), eliminated.gens))
    }

    /// Quotient by a single polynomial, syzygy-style: a basis of the
    /// submodule generated by (f_i, 0) and (g, 1) under position-over-term is
    /// computed; the elements whose first component vanished carry exactly
    /// the h with h*g in I in their second component. No auxiliary variables
    /// are involved, which keeps coefficients tame. A local `order` computes
    /// the quotient of the localizations at the origin instead.
    fn quotient_single_by(
        &self,
        g: &Poly,
        order: &MonomialOrder,
        budget: &mut Budget,
    ) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut gens: Vec<ModElem> = self
            .gens
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| ModElem::new(vec![f.clone(), Poly::zero(n)]))
            .collect();
        gens.push(ModElem::new(vec![g.clone(), Poly::one(n)]));
        let kernel = module_kernel(&gens, order, budget)?;
        let quotient_gens: Vec<Poly> =
            kernel.into_iter().map(|mut e| e.comps.pop().unwrap()).collect();
        Ok(Ideal::new(self.ring.clone(), quotient_gens))
    }

    fn quotient_single(&self, g: &Poly, budget: &mut Budget) -> Result<Ideal> {
        self.quotient_single_by(g, &MonomialOrder::DegRevLex, budget)
    }

    /// Ideal quotient (I : J) = {h : h*J in I} = the intersection of the
    /// per-generator quotients (I : g). Before intersecting — the expensive
    /// step, an extra elimination each — the accumulator is compared with the
    /// next quotient by containment: in the geometric situations this library
    /// works in, the per-generator quotients usually coincide, and the
    /// intersections all collapse to cheap membership checks.
    pub fn quotient(&self, other: &Ideal, budget: &mut Budget) -> Result<Ideal> {
        assert_eq!(self.ring, other.ring);
        if other.is_zero_ideal() {
            // (I : 0) is the unit ideal
            return Ok(Ideal::new(
                self.ring.clone(),
                vec![Poly::one(self.ring.nvars())],
            ));
        }
        let mut acc: Option<Ideal> = None;
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let q = self.quotient_single(g, budget)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => {
                    if q.contains_ideal(&prev, budget)? {
                        prev
                    } else if prev.contains_ideal(&q, budget)? {
                        q
                    } else {
                        prev.intersect(&q, budget)?
                    }
                }
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation by a single polynomial via the inverted-element trick:
    /// (I : g^inf) = (I*R[y] + (1 - y*g)) inter R, one elimination.
    fn saturate_single(&self, g: &Poly, budget: &mut Budget) -> Result<Ideal> {
        let n = self.ring.nvars();
        let ext = self.ring.extended("@y");
        let map: Vec<Option<usize>> = (0..n).map(Some).collect();
        let y = Poly::var(n + 1, n);
        let mut gens: Vec<Poly> = self
            .gens
            .iter()
            .map(|p| p.map_vars(n + 1, &map))
            .collect();
        gens.push(Poly::one(n + 1).sub(&y.mul(&g.map_vars(n + 1, &map))));
        let aux = Ideal::new(ext, gens);
        let out = aux.eliminate(&[n], budget)?;
        Ok(Ideal::new(self.ring.clone(), out.gens))
    }

    /// Saturation (I : J^inf), as the intersection of the per-generator
    /// saturations (both sides discard exactly the primary components whose
    /// radical contains J). As in [`Ideal::quotient`], containment checks
    /// usually collapse the intersections. The number of quotient steps the
    /// chain I : J : J : ... would have needed is recovered afterwards as the
    /// least k with S * J^k inside I — pure membership checks for the generic
    /// k <= 1; only deeper chains fall back to explicit quotients.
    pub fn saturate(&self, other: &Ideal, budget: &mut Budget) -> Result<Saturation> {
        let others: Vec<&Poly> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        let saturated = if others.is_empty() {
            // (I : 0^inf) is the unit ideal
            Ideal::new(self.ring.clone(), vec![Poly::one(self.ring.nvars())])
        } else {
            let mut acc: Option<Ideal> = None;
            for g in &others {
                let s = self.saturate_single(g, budget)?;
                acc = Some(match acc {
                    None => s,
                    Some(prev) => {
                        if s.contains_ideal(&prev, budget)? {
                            prev
                        } else if prev.contains_ideal(&s, budget)? {
                            s
                        } else {
                            prev.intersect(&s, budget)?
                        }
                    }
                });
            }
            acc.unwrap()
        };
        // steps = 0: already saturated
        if self.contains_ideal(&saturated, budget)? {
            return Ok(Saturation {
                ideal: saturated,
                quotient_steps: 0,
            });
        }
        // steps = 1: S * J inside I
        let mut products: Vec<Poly> = Vec::new();
        for s in saturated.gens.iter().filter(|s| !s.is_zero()) {
            for g in &others {
                products.push(s.mul(g));
            }
        }
        let prod_ideal = Ideal::new(self.ring.clone(), products);
        if self.contains_ideal(&prod_ideal, budget)? {
            return Ok(Saturation {
                ideal: saturated,
                quotient_steps: 1,
            });
        }
        // rare deeper chains: walk the quotient chain explicitly
        let mut current = self.quotient(other, budget)?;
        let mut steps = 1usize;
        loop {
            steps += 1;
            current = current.quotient(other, budget)?;
            if current.equals(&saturated, budget)? {
                return Ok(Saturation {
                    ideal: saturated,
                    quotient_steps: steps,
                });
            }
            if steps > 64 {
                return Err(Error::BudgetExceeded);
            }
        }
    }

    /// Intersection with the subring omitting the `drop` variables, via a
    /// block-elimination basis. The result lives in the smaller ring.
    pub fn eliminate(&self, drop: &[usize], budget: &mut Budget) -> Result<Ideal> {
        let n = self.ring.nvars();
        assert!(drop.len() < n, "cannot eliminate every variable");
        let order = MonomialOrder::Elimination {
            block: drop.to_vec(),
        };
        let basis = groebner_basis(&self.gens, &order, budget)?;
        let mut map: Vec<Option<usize>> = Vec::with_capacity(n);
        let mut small_vars: Vec<String> = Vec::new();
        for i in 0..n {
            if drop.contains(&i) {
                map.push(None);
            } else {
                map.push(Some(small_vars.len()));
                small_vars.push(self.ring.vars()[i].clone());
            }
        }
        let small_ring = Ring::new(small_vars);
        let kept: Vec<Poly> = basis
            .gens
            .iter()
            .filter(|g| drop.iter().all(|&v| !g.uses_var(v)))
            .map(|g| g.map_vars(small_ring.nvars(), &map))
            .collect();
        Ok(Ideal::new(small_ring, kept))
    }

    /// Local analogue of [`Ideal::eliminate`]: intersection of the ideal's
    /// localization at the origin with the subring omitting the `drop`
    /// variables, via the block-free elements of a standard basis under the
    /// mixed order (global on the block, local on the rest).
    pub fn eliminate_local(&self, drop: &[usize], budget: &mut Budget) -> Result<Ideal> {
        let n = self.ring.nvars();
        assert!(drop.len() < n, "cannot eliminate every variable");
        let order = MonomialOrder::LocalElimination {
            block: drop.to_vec(),
        };
        let basis = standard_basis(&self.gens, &order, budget)?;
        let mut map: Vec<Option<usize>> = Vec::with_capacity(n);
        let mut small_vars: Vec<String> = Vec::new();
        for i in 0..n {
            if drop.contains(&i) {
                map.push(None);
            } else {
                map.push(Some(small_vars.len()));
                small_vars.push(self.ring.vars()[i].clone());
            }
        }
        let small_ring = Ring::new(small_vars);
        let kept: Vec<Poly> = basis
            .gens
            .iter()
            .filter(|g| drop.iter().all(|&v| !g.uses_var(v)))
            .map(|g| g.map_vars(small_ring.nvars(), &map))
            .collect();
        Ok(Ideal::new(small_ring, kept))
    }

    /// Membership in the localization at the origin, via a zero Mora normal
    /// form against a local standard basis.
    pub fn contains_poly_local(&self, p: &Poly, budget: &mut Budget) -> Result<bool> {
        let b = self.standard(&MonomialOrder::NegDegRevLex, budget)?;
        Ok(normal_form(p, &b, budget)?.is_zero())
    }

    pub fn contains_ideal_local(&self, other: &Ideal, budget: &mut Budget) -> Result<bool> {
        let b = self.standard(&MonomialOrder::NegDegRevLex, budget)?;
        for g in &other.gens {
            if !normal_form(g, &b, budget)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Intersection of localized ideals, syzygy-style: basis elements of the
    /// submodule generated by (f_i, f_i) and (g_j, 0) whose first component
    /// vanished have an element of the intersection as second component.
    pub fn intersect_local(&self, other: &Ideal, budget: &mut Budget) -> Result<Ideal> {
        assert_eq!(self.ring, other.ring);
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let n = self.ring.nvars();
        let mut gens: Vec<ModElem> = self
            .gens
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| ModElem::new(vec![f.clone(), f.clone()]))
            .collect();
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            gens.push(ModElem::new(vec![g.clone(), Poly::zero(n)]));
        }
        let kernel = module_kernel(&gens, &MonomialOrder::NegDegRevLex, budget)?;
        let inter: Vec<Poly> =
            kernel.into_iter().map(|mut e| e.comps.pop().unwrap()).collect();
        Ok(Ideal::new(self.ring.clone(), inter))
    }

    /// Quotient (I : J) of localizations at the origin, as the intersection
    /// of the per-generator module quotients, with the same containment
    /// pruning as [`Ideal::quotient`].
    pub fn quotient_local(&self, other: &Ideal, budget: &mut Budget) -> Result<Ideal> {
        assert_eq!(self.ring, other.ring);
        if other.is_zero_ideal() {
            return Ok(Ideal::new(
                self.ring.clone(),
                vec![Poly::one(self.ring.nvars())],
            ));
        }
        let mut acc: Option<Ideal> = None;
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let q = self.quotient_single_by(g, &MonomialOrder::NegDegRevLex, budget)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => {
                    if q.contains_ideal_local(&prev, budget)? {
                        prev
                    } else if prev.contains_ideal_local(&q, budget)? {
                        q
                    } else {
                        prev.intersect_local(&q, budget)?
                    }
                }
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation (I : J^inf) in the localization at the origin, by the
    /// quotient chain I : J : J : ... until it stabilizes; the step count is
    /// the chain length, 0 meaning the input was already saturated.
    pub fn saturate_local(&self, other: &Ideal, budget: &mut Budget) -> Result<Saturation> {
        let mut current = self.clone();
        let mut steps = 0usize;
        loop {
            let q = current.quotient_local(other, budget)?;
            if current.contains_ideal_local(&q, budget)? {
                return Ok(Saturation {
                    ideal: current,
                    quotient_steps: steps,
                });
            }
            current = q;
            steps += 1;
            if steps > 64 {
                return Err(Error::BudgetExceeded);
            }
        }
    }

    /// Substitutes a rational value for one ring variable; the result lives in
    /// the ring without it.
    pub fn specialize(&self, var: usize, value: &Rat) -> Ideal {
        let n = self.ring.nvars();
        let map: Vec<Option<usize>> = (0..n)
            .map(|i| {
                if i == var {
                    None
                } else if i < var {
                    Some(i)
                } else {
                    Some(i - 1)
                }
            })
            .collect();
        let ring = self.ring.without(var);
        let gens = self
            .gens
            .iter()
            .map(|g| g.substitute(var, value).map_vars(n - 1, &map))
            .collect();
        Ideal::new(ring, gens)
    }

    /// Colength: the vector-space dimension of the (local or global) quotient
    /// ring, as a staircase count; `None` means infinite.
    pub fn colength(&self, mode: ColengthMode, budget: &mut Budget) -> Result<Option<u64>> {
        let basis = match mode {
            ColengthMode::AtOrigin => {
                self.standard(&MonomialOrder::NegDegRevLex, budget)?
            }
            ColengthMode::Global => self.groebner(&MonomialOrder::DegRevLex, budget)?,
        };
        Ok(staircase_count(&basis))
    }

    /// Krull dimension of the vanishing locus, read off the leading ideal of a
    /// degrevlex basis: the largest set of variables avoiding the support of
    /// every leading monomial.
    pub fn dimension(&self, budget: &mut Budget) -> Result<Option<usize>> {
        let basis = self.groebner(&MonomialOrder::DegRevLex, budget)?;
        if basis.is_unit_ideal() {
            return Ok(None); // empty locus
        }
        let n = self.ring.nvars();
        let leads = basis.leading_monomials();
        if leads.is_empty() {
            return Ok(Some(n));
        }
        let mut best = 0usize;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = leads.iter().all(|m| {
                (0..n).any(|i| m.exp(i) > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        Ok(Some(best))
    }

    /// Number of distinct points of a zero-dimensional vanishing locus, by
    /// adjoining the squarefree part of the eliminant in each variable
    /// (Seidenberg) and taking the global colength of the result. `None` when
    /// the locus is not finite.
    pub fn point_count_global(&self, budget: &mut Budget) -> Result<Option<u64>> {
        let Some(total) = self.colength(ColengthMode::Global, budget)? else {
            return Ok(None);
        };
        if total == 0 {
            return Ok(Some(0));
        }
        let n = self.ring.nvars();
        let mut radicalish = self.clone();
        for v in 0..n {
            let drop: Vec<usize> = (0..n).filter(|&i| i != v).collect();
            let eliminant = self.eliminate(&drop, budget)?;
            // zero-dimensional, so the eliminant ideal in one variable is
            // nonzero; take the gcd of its generators
            let mut g: Option<UniPoly> = None;
            for p in eliminant.gens.iter().filter(|p| !p.is_zero()) {
                let u = UniPoly::from_poly(p, 0);
                g = Some(match g {
                    None => u,
                    Some(prev) => prev.gcd(&u),
                });
            }
            let Some(g) = g else {
                return Ok(None);
            };
            let sqfree = g.squarefree_part();
            radicalish = radicalish.plus_poly(&sqfree.to_poly(n, v));
        }
        radicalish.colength(ColengthMode::Global, budget)
    }
}

/// Result of a saturation: the stable ideal plus the number of quotient steps
/// taken before the chain stabilized (0 means the input was already stable).
#[derive(Debug, Clone)]
pub struct Saturation {
    pub ideal: Ideal,
    pub quotient_steps: usize,
}

impl Saturation {
    /// Whether a single quotient already equaled the saturation.
    pub fn single_quotient_sufficed(&self) -> bool {
        self.quotient_steps <= 1
    }
}

/// Ideal of the Zariski closure of the image of a one-parameter polynomial
/// map u -> (phi_1(u), ..., phi_n(u)), by eliminating u from (x_i - phi_i).
/// The parametrization polynomials live in a one-variable ring.
pub fn implicitize(params: &[Poly], target: &Ring, budget: &mut Budget) -> Result<Ideal> {
    let n = target.nvars();
    assert_eq!(params.len(), n);
    if params.iter().all(|p| p.is_zero()) {
        return Err(Error::Degenerate(
            "degenerate parametrization: every component is zero".into(),
        ));
    }
    let ext = target.extended("@u");
    let u_map = vec![Some(n)];
    let mut gens = Vec::with_capacity(n);
    for (i, phi) in params.iter().enumerate() {
        assert_eq!(phi.nvars(), 1, "parametrization must be univariate");
        let phi_ext = phi.map_vars(n + 1, &u_map);
        gens.push(Poly::var(n + 1, i).sub(&phi_ext));
    }
    let aux = Ideal::new(ext, gens);
    let out = aux.eliminate(&[n], budget)?;
    Ok(Ideal::new(target.clone(), out.gens))
}

/// Dense univariate polynomial over the rationals, used for the squarefree
/// computations in point counting.
#[derive(Debug, Clone, PartialEq)]
struct UniPoly {
    coeffs: Vec<Rat>, // coeffs[i] is the coefficient of x^i; no trailing zeros
}

impl UniPoly {
    fn from_poly(p: &Poly, var: usize) -> UniPoly {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (m, c) in p.terms() {
            let d = m.exp(var) as usize;
            debug_assert_eq!(m.degree(), m.exp(var), "polynomial is not univariate");
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rat::zero());
            }
            coeffs[d] = coeffs[d].clone() + c;
        }
        let mut u = UniPoly { coeffs };
        u.trim();
        u
    }

    fn to_poly(&self, nvars: usize, var: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for (d, c) in self.coeffs.iter().enumerate() {
            let mut exps = vec![0u32; nvars];
            exps[var] = d as u32;
            out.add_term(crate::monomial::Monomial::new(exps), c);
        }
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()) == Some(true) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn derivative(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate().skip(1) {
            coeffs.push(c * Rat::from_integer(num::BigInt::from(d)));
        }
        let mut u = UniPoly { coeffs };
        u.trim();
        u
    }

    fn rem(&self, other: &UniPoly) -> UniPoly {
        assert!(!other.is_zero());
        let mut r = self.clone();
        let dlc = other.coeffs.last().unwrap().clone();
        let dd = other.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let f = r.coeffs.last().unwrap() / &dlc;
            for i in 0..=dd {
                let v = r.coeffs[i + shift].clone() - &other.coeffs[i] * &f;
                r.coeffs[i + shift] = v;
            }
            r.trim();
        }
        r
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.coeffs.last().unwrap().clone();
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c / &lc).collect(),
        }
    }

    fn div_exact(&self, other: &UniPoly) -> UniPoly {
        assert!(!other.is_zero());
        let mut r = self.clone();
        let dlc = other.coeffs.last().unwrap().clone();
        let dd = other.degree();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let f = r.coeffs.last().unwrap() / &dlc;
            q[shift] = f.clone();
            for i in 0..=dd {
                let v = r.coeffs[i + shift].clone() - &other.coeffs[i] * &f;
                r.coeffs[i + shift] = v;
            }
            r.trim();
        }
        debug_assert!(r.is_zero());
        let mut out = UniPoly { coeffs: q };
        out.trim();
        out
    }

    fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        if g.degree() == 0 {
            return self.monic();
        }
        self.div_exact(&g).monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::DEFAULT_STEP_BUDGET;
    use crate::poly::parse_poly;
    use num::One;

    fn ring_xyz() -> Ring {
        Ring::new(vec!["x", "y", "z"])
    }

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(
            ring.clone(),
            gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect(),
        )
    }

    fn budget() -> Budget {
        Budget::new(DEFAULT_STEP_BUDGET)
    }

    #[test]
    fn quotient_simple() {
        let r = ring_xyz();
        let q = ideal(&r, &["x*y"])
            .quotient(&ideal(&r, &["x"]), &mut budget())
            .unwrap();
        assert!(q.equals(&ideal(&r, &["y"]), &mut budget()).unwrap());
    }

    #[test]
    fn quotient_of_zero_ideal() {
        let r = ring_xyz();
        let q = Ideal::zero(r.clone())
            .quotient(&ideal(&r, &["x"]), &mut budget())
            .unwrap();
        assert!(q.is_zero_ideal());
    }

    #[test]
    fn quotient_three_lines_link() {
        // (xy+yz, xy+xz) : (xy, yz, xz) = (x-y, y+z)
        let r = ring_xyz();
        let q = ideal(&r, &["x*y + y*z", "x*y + x*z"])
            .quotient(&ideal(&r, &["x*y", "y*z", "x*z"]), &mut budget())
            .unwrap();
        assert!(q
            .equals(&ideal(&r, &["x - y", "y + z"]), &mut budget())
            .unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = ring_xyz();
        let s = ideal(&r, &["x^2*y"])
            .saturate(&ideal(&r, &["y"]), &mut budget())
            .unwrap();
        assert!(s.ideal.equals(&ideal(&r, &["x^2"]), &mut budget()).unwrap());

        let s = ideal(&r, &["x*y + y*z", "x*y + x*z"])
            .saturate(&ideal(&r, &["x*y", "y*z", "x*z"]), &mut budget())
            .unwrap();
        assert!(s
            .ideal
            .equals(&ideal(&r, &["x - y", "y + z"]), &mut budget())
            .unwrap());
        assert!(s.single_quotient_sufficed());

        // saturating by the unit ideal changes nothing
        let i = ideal(&r, &["x*y"]);
        let s = i.saturate(&ideal(&r, &["1"]), &mut budget()).unwrap();
        assert!(s.ideal.equals(&i, &mut budget()).unwrap());
        assert_eq!(s.quotient_steps, 0);
    }

    fn equal_local(a: &Ideal, b: &Ideal) -> bool {
        a.contains_ideal_local(b, &mut budget()).unwrap()
            && b.contains_ideal_local(a, &mut budget()).unwrap()
    }

    #[test]
    fn local_quotient_examples() {
        let r = ring_xyz();
        let q = ideal(&r, &["x^2*y"])
            .quotient_local(&ideal(&r, &["y"]), &mut budget())
            .unwrap();
        assert!(equal_local(&q, &ideal(&r, &["x^2"])));

        // 1 - x is a unit locally, so (x*(1-x)) : (x) contains 1 - x
        let q = ideal(&r, &["x - x^2"])
            .quotient_local(&ideal(&r, &["x"]), &mut budget())
            .unwrap();
        assert!(q
            .contains_poly_local(&parse_poly("1", &r).unwrap(), &mut budget())
            .unwrap());

        // quotient by the zero ideal is the unit ideal
        let q = ideal(&r, &["x"])
            .quotient_local(&Ideal::zero(r.clone()), &mut budget())
            .unwrap();
        assert!(q
            .contains_poly_local(&parse_poly("1", &r).unwrap(), &mut budget())
            .unwrap());
    }

    #[test]
    fn local_intersect_examples() {
        let r = ring_xyz();
        let i = ideal(&r, &["x"])
            .intersect_local(&ideal(&r, &["y"]), &mut budget())
            .unwrap();
        assert!(equal_local(&i, &ideal(&r, &["x*y"])));

        let i = ideal(&r, &["x^2", "y"])
            .intersect_local(&ideal(&r, &["x"]), &mut budget())
            .unwrap();
        assert!(equal_local(&i, &ideal(&r, &["x^2", "x*y"])));
    }

    #[test]
    fn local_saturation_examples() {
        // the off-origin component V(1 - x) is invisible locally, so
        // saturating (x^2 * (1 - x)) by (x) leaves the unit ideal
        let r = ring_xyz();
        let s = ideal(&r, &["x^2 - x^3"])
            .saturate_local(&ideal(&r, &["x"]), &mut budget())
            .unwrap();
        assert!(s
            .ideal
            .contains_poly_local(&parse_poly("1", &r).unwrap(), &mut budget())
            .unwrap());

        let s = ideal(&r, &["x^2*y"])
            .saturate_local(&ideal(&r, &["y"]), &mut budget())
            .unwrap();
        assert!(equal_local(&s.ideal, &ideal(&r, &["x^2"])));
        assert!(s.single_quotient_sufficed());

        // already saturated: zero quotient steps
        let i = ideal(&r, &["x - y^2"]);
        let s = i.saturate_local(&ideal(&r, &["y"]), &mut budget()).unwrap();
        assert!(equal_local(&s.ideal, &i));
        assert_eq!(s.quotient_steps, 0);
    }

    #[test]
    fn eliminate_examples() {
        let r = Ring::new(vec!["x", "u"]);
        let e = ideal(&r, &["u - x"]).eliminate(&[1], &mut budget()).unwrap();
        assert!(e.is_zero_ideal());

        let r = Ring::new(vec!["x", "y", "u"]);
        let e = ideal(&r, &["x - u^2", "y - u^3"])
            .eliminate(&[2], &mut budget())
            .unwrap();
        let small = Ring::new(vec!["x", "y"]);
        assert!(e
            .equals(&ideal(&small, &["y^2 - x^3"]), &mut budget())
            .unwrap());

        let r = Ring::new(vec!["x", "y", "t"]);
        let e = ideal(&r, &["x - t*y", "t^2 - 1"])
            .eliminate(&[2], &mut budget())
            .unwrap();
        let small = Ring::new(vec!["x", "y"]);
        assert!(e
            .equals(&ideal(&small, &["x^2 - y^2"]), &mut budget())
            .unwrap());
    }

    #[test]
    fn implicitize_cusp_and_line() {
        let u = Ring::new(vec!["u"]);
        let xy = Ring::new(vec!["x", "y"]);
        let i = implicitize(
            &[parse_poly("u^2", &u).unwrap(), parse_poly("u^3", &u).unwrap()],
            &xy,
            &mut budget(),
        )
        .unwrap();
        assert!(i.equals(&ideal(&xy, &["y^2 - x^3"]), &mut budget()).unwrap());

        let d = implicitize(
            &[parse_poly("u", &u).unwrap(), parse_poly("u", &u).unwrap()],
            &xy,
            &mut budget(),
        )
        .unwrap();
        assert!(d.equals(&ideal(&xy, &["x - y"]), &mut budget()).unwrap());

        assert!(implicitize(
            &[Poly::zero(1), Poly::zero(1)],
            &xy,
            &mut budget()
        )
        .is_err());
    }

    #[test]
    fn implicitize_345_matches_minors() {
        let u = Ring::new(vec!["u"]);
        let r = ring_xyz();
        let i = implicitize(
            &[
                parse_poly("u^3", &u).unwrap(),
                parse_poly("u^4", &u).unwrap(),
                parse_poly("u^5", &u).unwrap(),
            ],
            &r,
            &mut budget(),
        )
        .unwrap();
        let minors = ideal(&r, &["x*z - y^2", "x^3 - y*z", "x^2*y - z^2"]);
        assert!(i.equals(&minors, &mut budget()).unwrap());
    }

    #[test]
    fn specialize_examples() {
        let r = Ring::new(vec!["x", "y", "t"]);
        let i = ideal(&r, &["x*y + t*x + t^2"]);
        let at0 = i.specialize(2, &Rat::zero());
        let small = Ring::new(vec!["x", "y"]);
        assert_eq!(at0.gens, vec![parse_poly("x*y", &small).unwrap()]);
        let at1 = i.specialize(2, &Rat::one());
        assert_eq!(at1.gens, vec![parse_poly("x*y + x + 1", &small).unwrap()]);

        let j = ideal(&r, &["x^2 - y"]);
        let js = j.specialize(2, &Rat::one());
        assert_eq!(js.gens, vec![parse_poly("x^2 - y", &small).unwrap()]);
    }

    #[test]
    fn colength_at_origin_examples() {
        let r = ring_xyz();
        // three-lines discrepancy: (xy, yz, xz) + (x-y, y+z) has colength 2 at 0
        let i = ideal(&r, &["x*y", "y*z", "x*z", "x - y", "y + z"]);
        assert_eq!(
            i.colength(ColengthMode::AtOrigin, &mut budget()).unwrap(),
            Some(2)
        );
        // (3,4,5) discrepancy
        let j = ideal(
            &r,
            &[
                "x^2*y - z^2",
                "x^3 - y*z",
                "y^2 - x*z",
                "x + y + z",
                "y + z + x^2",
            ],
        );
        assert_eq!(
            j.colength(ColengthMode::AtOrigin, &mut budget()).unwrap(),
            Some(2)
        );
    }

    #[test]
    fn colength_global_counts_all_points() {
        let r = ring_xyz();
        // two points (+-1, 0, 0) with multiplicity 2 each
        let i = ideal(&r, &["z", "y^2", "x^2 - 1"]);
        assert_eq!(
            i.colength(ColengthMode::Global, &mut budget()).unwrap(),
            Some(4)
        );
        assert_eq!(
            i.colength(ColengthMode::AtOrigin, &mut budget()).unwrap(),
            Some(0)
        );
        assert_eq!(i.point_count_global(&mut budget()).unwrap(), Some(2));
    }

    #[test]
    fn dimension_tests() {
        let r = ring_xyz();
        assert_eq!(
            ideal(&r, &["x*y", "y*z", "x*z"]).dimension(&mut budget()).unwrap(),
            Some(1)
        );
        assert_eq!(
            ideal(&r, &["x", "y", "z"]).dimension(&mut budget()).unwrap(),
            Some(0)
        );
        assert_eq!(ideal(&r, &["x"]).dimension(&mut budget()).unwrap(), Some(2));
        assert_eq!(ideal(&r, &["1"]).dimension(&mut budget()).unwrap(), None);
    }

    #[test]
    fn quotient_contains_original() {
        let r = ring_xyz();
        let cases = [
            (ideal(&r, &["x*y"]), ideal(&r, &["x"])),
            (
                ideal(&r, &["x*y + y*z", "x*y + x*z"]),
                ideal(&r, &["x*y", "y*z", "x*z"]),
            ),
            (ideal(&r, &["x^2", "y^2"]), ideal(&r, &["x + y"])),
        ];
        for (i, j) in cases {
            let q = i.quotient(&j, &mut budget()).unwrap();
            assert!(q.contains_ideal(&i, &mut budget()).unwrap());
        }
    }

    #[test]
    fn saturate_idempotent() {
        let r = ring_xyz();
        let i = ideal(&r, &["x^2*y", "x*z^2"]);
        let j = ideal(&r, &["x*y", "z"]);
        let s1 = i.saturate(&j, &mut budget()).unwrap().ideal;
        let s2 = s1.saturate(&j, &mut budget()).unwrap().ideal;
        assert!(s1.equals(&s2, &mut budget()).unwrap());
    }

    #[test]
    fn local_colength_order_independent() {
        let r = ring_xyz();
        let i = ideal(&r, &["x*y", "y*z", "x*z", "x^2 + y^2 + z^2"]);
        let a = i.standard(&MonomialOrder::NegDegRevLex, &mut budget()).unwrap();
        let b = i.standard(&MonomialOrder::NegDegLex, &mut budget()).unwrap();
        assert_eq!(staircase_count(&a), staircase_count(&b));
        assert_eq!(staircase_count(&a), Some(6));
    }
}
