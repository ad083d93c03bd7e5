//! Groebner bases for global orders (Buchberger) and standard bases for local
//! orders (Mora normal form with ecart selection), with full reduction and
//! staircase counting.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;

/// Default reduction-step budget for a single basis computation.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Guard against runaway computations: every single reduction step charges one
/// tick; running out is a reported error, never a wrong answer.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { remaining: limit }
    }

    pub fn tick(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::BudgetExceeded);
        }
        self.remaining -= 1;
        Ok(())
    }
}

/// A Buchberger-complete (global order) or Mora-complete (local order) basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    pub gens: Vec<Poly>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl Basis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .filter_map(|g| g.leading_monomial(&self.order).cloned())
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens
            .iter()
            .any(|g| g.leading_monomial(&self.order).map(|m| m.is_one()) == Some(true))
    }
}

/// Full normal form with respect to a complete basis: no term of the result is
/// divisible by any leading monomial of the basis. For local orders this is
/// the Mora normal form, which decides membership in the localized ideal.
pub fn normal_form(p: &Poly, basis: &Basis, budget: &mut Budget) -> Result<Poly> {
    if basis.order.is_global() {
        reduce_full(p, &basis.gens, &basis.order, budget)
    } else {
        mora_normal_form(p, &basis.gens, &basis.order, budget)
    }
}

/// Ordinary multivariate division: reduce every term of `p` by the first
/// generator whose leading monomial divides it. Terminates for global orders.
pub fn reduce_full(
    p: &Poly,
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Poly> {
    debug_assert!(order.is_global());
    let leads: Vec<(Monomial, crate::poly::Rat)> = gens
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("zero generator");
            (m.clone(), c.clone())
        })
        .collect();
    let mut h = p.clone();
    let mut rem = Poly::zero(p.nvars());
    while let Some((hm, hc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        budget.tick()?;
        let reducer = leads.iter().position(|(lm, _)| lm.divides(&hm));
        match reducer {
            Some(i) => {
                let m = leads[i].0.quotient_into(&hm);
                let c = &hc / &leads[i].1;
                h = h.sub_scaled(&c, &m, &gens[i]);
            }
            None => {
                rem.add_term(hm.clone(), &hc);
                let mut just_lead = Poly::zero(p.nvars());
                just_lead.add_term(hm, &hc);
                h = h.sub(&just_lead);
            }
        }
    }
    Ok(rem)
}

/// Mora normal form with ecart-based reducer selection. Intermediate partial
/// remainders join the reducer list, which is what makes the algorithm
/// terminate for local orders: the result is a weak normal form, i.e. a unit
/// multiple of `p` minus an element of the ideal. Terms whose leading monomial
/// no reducer divides are shelved into the remainder, so the output has no
/// term divisible by a basis leading monomial.
pub fn mora_normal_form(
    p: &Poly,
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Poly> {
    let mut reducers: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut h = p.clone();
    let mut rem = Poly::zero(p.nvars());
    while !h.is_zero() {
        budget.tick()?;
        let (hm, hc) = {
            let (m, c) = h.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        // candidate reducers whose leading monomial divides LM(h), minimal
        // ecart first, ties to the oldest reducer
        let mut best: Option<(usize, u32)> = None;
        for (i, g) in reducers.iter().enumerate() {
            let lm = g.leading_monomial(order).unwrap();
            if lm.divides(&hm) {
                let e = g.ecart(order);
                if best.map(|(_, be)| e < be).unwrap_or(true) {
                    best = Some((i, e));
                }
            }
        }
        match best {
            Some((i, ecart_g)) => {
                let ecart_h = h.ecart(order);
                if ecart_g > ecart_h {
                    reducers.push(h.clone());
                }
                let g = reducers[i].clone();
                let (glm, glc) = g.leading_term(order).unwrap();
                let m = glm.quotient_into(&hm);
                let c = &hc / glc;
                h = h.sub_scaled(&c, &m, &g);
            }
            None => {
                rem.add_term(hm.clone(), &hc);
                let mut just_lead = Poly::zero(p.nvars());
                just_lead.add_term(hm, &hc);
                h = h.sub(&just_lead);
            }
        }
    }
    Ok(rem)
}

fn spoly(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let mf = fm.quotient_into(&l);
    let mg = gm.quotient_into(&l);
    let a = f.mul_monomial(&mf).scale(&(num::BigRational::from_integer(1.into()) / fc));
    let b = g.mul_monomial(&mg).scale(&(num::BigRational::from_integer(1.into()) / gc));
    a.sub(&b)
}

/// Shared Buchberger-style completion loop; the normal-form routine decides
/// whether this computes a Groebner basis (global order) or a standard basis
/// (local order, Mora).
/// Deterministic total order on polynomials: leading monomial descending,
/// then term count, then structural comparison. Makes basis computations a
/// function of the input set rather than the input sequence.
fn canonical_cmp(a: &Poly, b: &Poly, order: &MonomialOrder) -> Ordering {
    let la = a.leading_monomial(order).unwrap();
    let lb = b.leading_monomial(order).unwrap();
    order
        .cmp(lb, la)
        .then_with(|| a.num_terms().cmp(&b.num_terms()))
        .then_with(|| struct_cmp(a, b))
}

fn struct_cmp(a: &Poly, b: &Poly) -> Ordering {
    let ta: Vec<_> = a.terms().collect();
    let tb: Vec<_> = b.terms().collect();
    for ((ma, ca), (mb, cb)) in ta.iter().zip(&tb) {
        let c = ma.cmp(mb).then_with(|| ca.cmp(cb));
        if c != Ordering::Equal {
            return c;
        }
    }
    ta.len().cmp(&tb.len())
}

/// Critical pair with its cached lcm; recomputing lcms during pair selection
/// dominates the loop otherwise.
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Moeller pair update: add element `k` to the pair queue, discarding
/// pairs settled by the chain criterion (an older pair whose lcm is a proper
/// multiple through LM(k) of both new lcms), redundant new pairs whose lcm is
/// a proper multiple of another new pair's lcm, duplicates among equal lcms,
/// and finally coprime pairs (product criterion). All three criteria are
/// order-agnostic, so they apply to local standard bases as well.
fn update_pairs(pairs: &mut Vec<Pair>, leads: &[Monomial], k: usize) {
    let lmk = &leads[k];
    pairs.retain(|p| {
        !(lmk.divides(&p.lcm)
            && p.lcm != leads[p.i].lcm(lmk)
            && p.lcm != leads[p.j].lcm(lmk))
    });
    let mut fresh: Vec<Pair> = (0..k)
        .map(|i| Pair {
            i,
            j: k,
            lcm: leads[i].lcm(lmk),
        })
        .collect();
    // keep only pairs with divisibility-minimal lcm; among equal lcms keep
    // one, preferring a coprime pair so the product criterion then removes it
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..fresh.len() {
            if a == b || !keep[b] {
                continue;
            }
            if fresh[b].lcm.divides(&fresh[a].lcm) {
                if fresh[a].lcm != fresh[b].lcm {
                    keep[a] = false;
                    break;
                }
                let a_cop = leads[fresh[a].i].is_coprime(lmk);
                let b_cop = leads[fresh[b].i].is_coprime(lmk);
                if (b_cop && !a_cop) || (a_cop == b_cop && b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
    }
    let mut it = keep.into_iter();
    fresh.retain(|_| it.next().unwrap());
    fresh.retain(|p| !leads[p.i].is_coprime(lmk));
    pairs.extend(fresh);
}

/// Rescale `h` (and `rem` by the same factor) so the coefficients of both are
/// coprime integers. During completion the result is only needed up to a
/// scalar, and without this the rationals accumulated by elimination steps
/// grow without bound and dominate the running time.
fn strip_content(h: &mut Poly, rem: &mut Poly) {
    use num::{BigInt, Integer, One, Signed, Zero};
    let mut den_lcm = BigInt::one();
    for c in h.terms().map(|(_, c)| c).chain(rem.terms().map(|(_, c)| c)) {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for c in h.terms().map(|(_, c)| c).chain(rem.terms().map(|(_, c)| c)) {
        content = content.gcd(&(c.numer() * &den_lcm / c.denom()).abs());
        if content.is_one() && den_lcm.is_one() {
            return;
        }
    }
    if content.is_zero() {
        return;
    }
    let factor = crate::poly::Rat::new(den_lcm, content);
    *h = h.scale(&factor);
    *rem = rem.scale(&factor);
}

/// Weak normal form used inside the completion loop: correct up to a nonzero
/// scalar. Fraction-free cross-multiplication with content stripping keeps
/// coefficients small; reducer leading data is cached. For local orders this
/// is the Mora loop (ecart selection, shelving of partial remainders); for
/// global orders no shelving occurs.
fn nf_for_completion(
    s: &Poly,
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Poly> {
    struct Red {
        poly: Poly,
        lm: Monomial,
        lc: crate::poly::Rat,
        ecart: u32,
    }
    let cache = |g: &Poly| {
        let (m, c) = g.leading_term(order).unwrap();
        Red {
            lm: m.clone(),
            lc: c.clone(),
            ecart: g.ecart(order),
            poly: g.clone(),
        }
    };
    let local = order.is_local();
    let mut reducers: Vec<Red> = gens.iter().filter(|g| !g.is_zero()).map(cache).collect();
    let mut h = s.primitive(order);
    let mut rem = Poly::zero(s.nvars());
    while let Some((hm, hc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        budget.tick()?;
        // among divisors of LM(h): minimal ecart (required for Mora
        // termination), ties to the oldest reducer
        let mut best: Option<(usize, u32)> = None;
        for (i, r) in reducers.iter().enumerate() {
            if r.lm.divides(&hm) {
                if best.map(|(_, be)| r.ecart < be).unwrap_or(true) {
                    best = Some((i, r.ecart));
                }
            }
        }
        match best {
            Some((i, ecart_g)) => {
                if local && ecart_g > h.ecart(order) {
                    reducers.push(cache(&h));
                }
                let g = &reducers[i];
                let m = g.lm.quotient_into(&hm);
                rem = rem.scale(&g.lc);
                h = h.scale(&g.lc).sub_scaled(&hc, &m, &g.poly);
                strip_content(&mut h, &mut rem);
            }
            None => {
                rem.add_term(hm.clone(), &hc);
                let mut just_lead = Poly::zero(s.nvars());
                just_lead.add_term(hm, &hc);
                h = h.sub(&just_lead);
            }
        }
    }
    Ok(rem)
}

/// Homogenize with one extra variable appended last: each term of degree d
/// picks up the homogenizing variable to the power `total` - d.
fn homogenize_to(p: &Poly, total: u32) -> Poly {
    let mut out = Poly::zero(p.nvars() + 1);
    for (m, c) in p.terms() {
        let mut exps = m.exps().to_vec();
        exps.push(total - m.degree());
        out.add_term(Monomial::new(exps), c);
    }
    out
}

fn homogenize(p: &Poly) -> Poly {
    homogenize_to(p, p.total_degree())
}

/// Set the homogenizing variable (last) to one and drop it. On a homogeneous
/// polynomial no two terms collide, since their original-variable parts
/// determine the dropped exponent.
fn dehomogenize(p: &Poly) -> Poly {
    let n = p.nvars() - 1;
    let mut out = Poly::zero(n);
    for (m, c) in p.terms() {
        out.add_term(Monomial::new(m.exps()[..n].to_vec()), c);
    }
    out
}

/// Completion: for a global order this is Buchberger's algorithm directly.
/// For a local order it is Lazard's method: complete the homogenized input
/// under the degree-first order that restricts to the local order, then
/// dehomogenize — the result is a standard basis. This avoids Mora reduction
/// during completion, whose intermediate ecart walks are intractable on
/// wide inputs; Mora remains in use for normal forms against finished bases.
fn complete(
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<Poly>> {
    if order.is_local() {
        let hom_order = MonomialOrder::Homogenized {
            inner: Box::new(order.clone()),
        };
        let hom_gens: Vec<Poly> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(homogenize)
            .collect();
        let completed = complete_core(&hom_gens, &hom_order, budget)?;
        return Ok(completed.iter().map(dehomogenize).collect());
    }
    complete_core(gens, order, budget)
}

fn complete_core(
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.primitive(order))
        .collect();
    basis.sort_by(|a, b| canonical_cmp(a, b, order));
    basis.dedup();
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();
    let mut pairs: Vec<Pair> = Vec::new();
    for k in 0..basis.len() {
        update_pairs(&mut pairs, &leads, k);
    }
    while !pairs.is_empty() {
        budget.tick()?;
        // normal selection: pair with the lowest-degree lcm, ties by order
        let (pi, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
            })
            .unwrap();
        let Pair { i, j, .. } = pairs.swap_remove(pi);
        let s = spoly(&basis[i], &basis[j], order);
        let r = nf_for_completion(&s, &basis, order, budget)?;
        if !r.is_zero() {
            let r = r.primitive(order);
            let k = basis.len();
            leads.push(r.leading_monomial(order).unwrap().clone());
            basis.push(r);
            update_pairs(&mut pairs, &leads, k);
        }
    }
    Ok(basis)
}

/// Keep only generators whose leading monomial is not divisible by another's,
/// normalize leading coefficients to one, and sort by descending leading
/// monomial. For global orders the tails are additionally fully interreduced,
/// giving the unique reduced Groebner basis. For local orders tails are kept
/// as computed: full tail reduction need not terminate in a local ring, and
/// Mora-style tail reduction can alter the generated ideal by a unit twist.
fn interreduce(
    mut basis: Vec<Poly>,
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<Poly>> {
    basis.sort_by(|a, b| canonical_cmp(a, b, order));
    // minimalize: on equal leading monomials the sort puts the structurally
    // smaller generator first, so it is the one kept
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let mi = basis[i].leading_monomial(order).unwrap().clone();
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let mj = basis[j].leading_monomial(order).unwrap();
                if mj.divides(&mi) && (!mi.divides(mj) || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    if order.is_global() {
        // tail reduction to a fixpoint
        loop {
            let mut changed = false;
            for i in 0..basis.len() {
                let g = basis[i].clone();
                let others: Vec<Poly> = basis
                    .iter()
                    .enumerate()
                    .filter_map(|(j, h)| (j != i).then(|| h.clone()))
                    .collect();
                // nf_for_completion is a full normal form for global orders,
                // correct up to a scalar — which primitive() then fixes
                let new_g = if others.is_empty() {
                    g.clone()
                } else {
                    nf_for_completion(&g, &others, order, budget)?
                };
                debug_assert!(!new_g.is_zero());
                let new_g = new_g.primitive(order);
                if new_g != basis[i] {
                    basis[i] = new_g;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    basis.sort_by(|a, b| canonical_cmp(a, b, order));
    Ok(basis.into_iter().map(|g| g.monic(order)).collect())
}

/// Reduced Groebner basis of the ideal generated by `gens` under a global
/// order. The zero ideal yields an empty basis.
pub fn groebner_basis(
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Basis> {
    assert!(order.is_global(), "groebner_basis requires a well-order");
    let completed = complete(gens, order, budget)?;
    let reduced = interreduce(completed, order, budget)?;
    Ok(Basis {
        gens: reduced,
        order: order.clone(),
        reduced: true,
    })
}

/// Mora-complete standard basis of the localized ideal generated by `gens`
/// under a local order, minimalized and tail-reduced.
pub fn standard_basis(
    gens: &[Poly],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Basis> {
    assert!(order.is_local(), "standard_basis requires a local order");
    let completed = complete(gens, order, budget)?;
    let reduced = interreduce(completed, order, budget)?;
    Ok(Basis {
        gens: reduced,
        order: order.clone(),
        reduced: true,
    })
}

/// Number of monomials outside the leading ideal of a complete basis, or
/// `None` when that count is infinite (some variable has no pure power in the
/// leading ideal).
pub fn staircase_count(basis: &Basis) -> Option<u64> {
    let leads = basis.leading_monomials();
    if leads.is_empty() {
        return None; // zero ideal in a ring with at least one variable
    }
    let nvars = leads[0].nvars();
    if nvars == 0 {
        return Some(if leads.iter().any(|m| m.is_one()) { 0 } else { 1 });
    }
    // finite iff each variable has a pure-power generator (or 1 is a lead)
    let mut bounds = vec![None::<u32>; nvars];
    for m in &leads {
        let support: Vec<usize> = (0..nvars).filter(|&i| m.exp(i) > 0).collect();
        if support.is_empty() {
            return Some(0); // unit ideal
        }
        if support.len() == 1 {
            let i = support[0];
            let e = m.exp(i);
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    if bounds.iter().any(|b| b.is_none()) {
        return None;
    }
    let bounds: Vec<u32> = bounds.into_iter().map(|b| b.unwrap()).collect();
    // every standard monomial lies in the box below the pure-power bounds
    let mut count = 0u64;
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i].max(1) {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Element of a free module over the polynomial ring, one polynomial per
/// component. Used with the position-over-term extension of a monomial order,
/// in which every term of an earlier component beats every term of a later
/// one. Module bases are what make quotient and intersection computations
/// syzygy-style: no auxiliary variables, no inverted elements, and therefore
/// none of the coefficient blowup those eliminations suffer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModElem {
    pub comps: Vec<Poly>,
}

/// Compare two module terms (position, monomial) in the position-over-term
/// extension of `order`. For the internal homogenized order the total degree
/// decides first (degree-compatibility is what makes Lazard's method work);
/// the position and the wrapped local order on the original variables break
/// ties, so on homogeneous elements the leading term dehomogenizes to the
/// position-over-term leading term under the wrapped order.
fn mod_cmp(
    order: &MonomialOrder,
    pa: usize,
    ma: &Monomial,
    pb: usize,
    mb: &Monomial,
) -> Ordering {
    if let MonomialOrder::Homogenized { inner } = order {
        let n = ma.nvars() - 1;
        ma.degree()
            .cmp(&mb.degree())
            .then_with(|| pb.cmp(&pa))
            .then_with(|| inner.cmp_exps(&ma.exps()[..n], &mb.exps()[..n]))
    } else {
        pb.cmp(&pa).then_with(|| order.cmp(ma, mb))
    }
}

impl ModElem {
    pub fn new(comps: Vec<Poly>) -> Self {
        ModElem { comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    fn scale(&self, c: &crate::poly::Rat) -> ModElem {
        ModElem::new(self.comps.iter().map(|p| p.scale(c)).collect())
    }

    fn mul_monomial(&self, m: &Monomial) -> ModElem {
        ModElem::new(self.comps.iter().map(|p| p.mul_monomial(m)).collect())
    }

    fn sub(&self, other: &ModElem) -> ModElem {
        ModElem::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    fn sub_scaled(&self, c: &crate::poly::Rat, m: &Monomial, other: &ModElem) -> ModElem {
        ModElem::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub_scaled(c, m, b))
                .collect(),
        )
    }

    /// Leading (position, monomial, coefficient) under the position-over-term
    /// extension of `order`.
    fn leading(&self, order: &MonomialOrder) -> Option<(usize, &Monomial, &crate::poly::Rat)> {
        let mut best: Option<(usize, &Monomial, &crate::poly::Rat)> = None;
        for (p, comp) in self.comps.iter().enumerate() {
            if let Some((m, c)) = comp.leading_term(order) {
                let better = match best {
                    Some((bp, bm, _)) => mod_cmp(order, p, m, bp, bm) == Ordering::Greater,
                    None => true,
                };
                if better {
                    best = Some((p, m, c));
                }
            }
        }
        best
    }

    /// Clears denominators and the joint integer content across every
    /// component; the sign makes the leading coefficient positive.
    fn primitive(&self, order: &MonomialOrder) -> ModElem {
        use num::{BigInt, Integer, One, Signed, Zero};
        let mut den_lcm = BigInt::one();
        for comp in &self.comps {
            for (_, c) in comp.terms() {
                den_lcm = den_lcm.lcm(c.denom());
            }
        }
        let mut content = BigInt::zero();
        for comp in &self.comps {
            for (_, c) in comp.terms() {
                content = content.gcd(&(c.numer() * &den_lcm / c.denom()).abs());
            }
        }
        if content.is_zero() {
            return self.clone();
        }
        let factor = crate::poly::Rat::new(den_lcm, content);
        let out = self.scale(&factor);
        if out.leading(order).map(|(_, _, c)| c.is_negative()) == Some(true) {
            out.scale(&-crate::poly::Rat::one())
        } else {
            out
        }
    }
}

/// Joint content stripping across the working element and its shelved
/// remainder, mirroring [`strip_content`].
fn strip_content_mod(h: &mut ModElem, rem: &mut ModElem) {
    use num::{BigInt, Integer, One, Signed, Zero};
    let coeffs = |e: &ModElem| -> Vec<crate::poly::Rat> {
        e.comps
            .iter()
            .flat_map(|c| c.terms().map(|(_, x)| x.clone()).collect::<Vec<_>>())
            .collect()
    };
    let all: Vec<crate::poly::Rat> = coeffs(h).into_iter().chain(coeffs(rem)).collect();
    let mut den_lcm = BigInt::one();
    for c in &all {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for c in &all {
        content = content.gcd(&(c.numer() * &den_lcm / c.denom()).abs());
        if content.is_one() && den_lcm.is_one() {
            return;
        }
    }
    if content.is_zero() {
        return;
    }
    let factor = crate::poly::Rat::new(den_lcm, content);
    *h = h.scale(&factor);
    *rem = rem.scale(&factor);
}

/// Homogenize every component to one common total degree, so all terms of the
/// element share the same degree in the extended ring.
fn homogenize_mod(e: &ModElem) -> ModElem {
    let d = e.comps.iter().map(|c| c.total_degree()).max().unwrap_or(0);
    ModElem::new(e.comps.iter().map(|c| homogenize_to(c, d)).collect())
}

fn dehomogenize_mod(e: &ModElem) -> ModElem {
    ModElem::new(e.comps.iter().map(dehomogenize).collect())
}

fn spoly_mod(f: &ModElem, g: &ModElem, order: &MonomialOrder) -> ModElem {
    let (pf, mf, cf) = {
        let (p, m, c) = f.leading(order).unwrap();
        (p, m.clone(), c.clone())
    };
    let (pg, mg, cg) = {
        let (p, m, c) = g.leading(order).unwrap();
        (p, m.clone(), c.clone())
    };
    debug_assert_eq!(pf, pg, "s-pairs require matching leading positions");
    let l = mf.lcm(&mg);
    let qf = mf.quotient_into(&l);
    let qg = mg.quotient_into(&l);
    // cross-multiplied, so no rationals appear on integer input
    f.mul_monomial(&qf).scale(&cg).sub(&g.mul_monomial(&qg).scale(&cf))
}

struct MPair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Pair update for modules: as [`update_pairs`], with pairs only between
/// elements of equal leading position, and without the product criterion —
/// the coprimality argument does not survive the extra components. With
/// `top_only` no pairs are formed at positions past the first: by Schreyer's
/// theorem the elements harvested from first-position s-pair reductions
/// already generate the submodule of elements with vanishing first component,
/// and skipping the rest avoids the (expensive, unneeded) Groebner basis of
/// that kernel.
fn update_pairs_mod(pairs: &mut Vec<MPair>, leads: &[(usize, Monomial)], k: usize, top_only: bool) {
    let (pk, lmk) = (&leads[k].0, &leads[k].1);
    if top_only && *pk != 0 {
        return;
    }
    pairs.retain(|p| {
        !(leads[p.i].0 == *pk
            && lmk.divides(&p.lcm)
            && p.lcm != leads[p.i].1.lcm(lmk)
            && p.lcm != leads[p.j].1.lcm(lmk))
    });
    let mut fresh: Vec<MPair> = (0..k)
        .filter(|&i| leads[i].0 == *pk)
        .map(|i| MPair {
            i,
            j: k,
            lcm: leads[i].1.lcm(lmk),
        })
        .collect();
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..fresh.len() {
            if a == b || !keep[b] {
                continue;
            }
            if fresh[b].lcm.divides(&fresh[a].lcm)
                && (fresh[a].lcm != fresh[b].lcm || b < a)
            {
                keep[a] = false;
                break;
            }
        }
    }
    let mut it = keep.into_iter();
    fresh.retain(|_| it.next().unwrap());
    pairs.extend(fresh);
}

/// Weak normal form of a module element, correct up to a nonzero scalar;
/// fraction-free with joint content stripping. Only ever called with a
/// well-order on module terms (plain position-over-term of a global order, or
/// the degree-first homogenized order), so plain oldest-reducer selection
/// terminates.
fn nf_mod(
    s: &ModElem,
    gens: &[ModElem],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<ModElem> {
    struct RedM {
        elem: ModElem,
        pos: usize,
        lm: Monomial,
        lc: crate::poly::Rat,
    }
    let cache = |g: &ModElem| {
        let (p, m, c) = g.leading(order).unwrap();
        RedM {
            pos: p,
            lm: m.clone(),
            lc: c.clone(),
            elem: g.clone(),
        }
    };
    let reducers: Vec<RedM> = gens.iter().filter(|g| !g.is_zero()).map(cache).collect();
    let mut h = s.primitive(order);
    let ncomps = s.comps.len();
    let mut rem = ModElem::new(vec![Poly::zero(s.nvars()); ncomps]);
    while let Some((hp, hm, hc)) = h
        .leading(order)
        .map(|(p, m, c)| (p, m.clone(), c.clone()))
    {
        budget.tick()?;
        let red = reducers
            .iter()
            .find(|r| r.pos == hp && r.lm.divides(&hm));
        match red {
            Some(g) => {
                let m = g.lm.quotient_into(&hm);
                rem = rem.scale(&g.lc);
                h = h.scale(&g.lc).sub_scaled(&hc, &m, &g.elem);
                strip_content_mod(&mut h, &mut rem);
            }
            None => {
                rem.comps[hp].add_term(hm.clone(), &hc);
                let mut just = Poly::zero(h.nvars());
                just.add_term(hm, &hc);
                h.comps[hp] = h.comps[hp].sub(&just);
            }
        }
    }
    Ok(rem)
}

fn canonical_cmp_mod(a: &ModElem, b: &ModElem, order: &MonomialOrder) -> Ordering {
    let (pa, ma, _) = a.leading(order).unwrap();
    let (pb, mb, _) = b.leading(order).unwrap();
    mod_cmp(order, pb, mb, pa, ma)
        .then_with(|| {
            let ta: usize = a.comps.iter().map(|c| c.num_terms()).sum();
            let tb: usize = b.comps.iter().map(|c| c.num_terms()).sum();
            ta.cmp(&tb)
        })
        .then_with(|| {
            for (ca, cb) in a.comps.iter().zip(&b.comps) {
                let c = struct_cmp(ca, cb);
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
}

/// Generators of the kernel intersection: the elements with vanishing first
/// component of the submodule generated by `gens`, under the
/// position-over-term extension of `order` (earlier components dominate).
/// The first components are completed to a full (Groebner or, for a local
/// order via homogenization, standard) basis; each s-pair reduction whose
/// first component dies contributes its surviving components. By Schreyer's
/// theorem these harvested elements generate every module element with zero
/// first component.
pub fn module_kernel(
    gens: &[ModElem],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<ModElem>> {
    let basis = if order.is_local() {
        let hom_order = MonomialOrder::Homogenized {
            inner: Box::new(order.clone()),
        };
        let hom: Vec<ModElem> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(homogenize_mod)
            .collect();
        let completed = complete_mod_core(&hom, &hom_order, true, budget)?;
        completed.iter().map(dehomogenize_mod).collect()
    } else {
        complete_mod_core(gens, order, true, budget)?
    };
    Ok(basis
        .into_iter()
        .filter(|e| e.comps[0].is_zero())
        .collect())
}

fn complete_mod_core(
    gens: &[ModElem],
    order: &MonomialOrder,
    top_only: bool,
    budget: &mut Budget,
) -> Result<Vec<ModElem>> {
    let mut basis: Vec<ModElem> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.primitive(order))
        .collect();
    basis.sort_by(|a, b| canonical_cmp_mod(a, b, order));
    basis.dedup();
    let mut leads: Vec<(usize, Monomial)> = basis
        .iter()
        .map(|g| {
            let (p, m, _) = g.leading(order).unwrap();
            (p, m.clone())
        })
        .collect();
    let mut pairs: Vec<MPair> = Vec::new();
    for k in 0..basis.len() {
        update_pairs_mod(&mut pairs, &leads, k, top_only);
    }
    while !pairs.is_empty() {
        budget.tick()?;
        let (pi, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
            })
            .unwrap();
        let MPair { i, j, .. } = pairs.swap_remove(pi);
        let s = spoly_mod(&basis[i], &basis[j], order);
        let r = nf_mod(&s, &basis, order, budget)?;
        if !r.is_zero() {
            let r = r.primitive(order);
            let k = basis.len();
            let (p, m) = {
                let (p, m, _) = r.leading(order).unwrap();
                (p, m.clone())
            };
            leads.push((p, m));
            basis.push(r);
            update_pairs_mod(&mut pairs, &leads, k, top_only);
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Ring};

    fn ring_xyz() -> Ring {
        Ring::new(vec!["x", "y", "z"])
    }

    fn p(s: &str, r: &Ring) -> Poly {
        parse_poly(s, r).unwrap()
    }

    fn budget() -> Budget {
        Budget::new(DEFAULT_STEP_BUDGET)
    }

    #[test]
    fn groebner_already_reduced() {
        let r = ring_xyz();
        let b = groebner_basis(
            &[p("x", &r), p("y", &r)],
            &MonomialOrder::DegRevLex,
            &mut budget(),
        )
        .unwrap();
        assert_eq!(b.gens, vec![p("x", &r), p("y", &r)]);
    }

    #[test]
    fn groebner_hand_run() {
        // S(x^2-1, xy-1) = y(x^2-1) - x(xy-1) = x - y
        let r = Ring::new(vec!["x", "y"]);
        let b = groebner_basis(
            &[p("x^2 - 1", &r), p("x*y - 1", &r)],
            &MonomialOrder::DegRevLex,
            &mut budget(),
        )
        .unwrap();
        assert!(b.gens.contains(&p("x - y", &r)));
    }

    #[test]
    fn groebner_zero_ideal() {
        let b = groebner_basis(&[Poly::zero(3)], &MonomialOrder::DegRevLex, &mut budget())
            .unwrap();
        assert!(b.gens.is_empty());
    }

    #[test]
    fn standard_basis_single_gen() {
        let r = Ring::new(vec!["x", "y"]);
        let b = standard_basis(
            &[p("y^2 - x^3", &r)],
            &MonomialOrder::NegDegRevLex,
            &mut budget(),
        )
        .unwrap();
        assert_eq!(b.gens.len(), 1);
        assert_eq!(
            b.gens[0].leading_monomial(&MonomialOrder::NegDegRevLex).unwrap(),
            &crate::monomial::Monomial::new(vec![0, 2])
        );
    }

    #[test]
    fn standard_basis_unit_multiple_collapse() {
        // (x + x^2, x) has standard basis with leading ideal (x)
        let r = Ring::new(vec!["x"]);
        let b = standard_basis(
            &[p("x + x^2", &r), p("x", &r)],
            &MonomialOrder::NegDegRevLex,
            &mut budget(),
        )
        .unwrap();
        assert_eq!(b.gens, vec![p("x", &r)]);
    }

    #[test]
    fn normal_form_membership() {
        let r = ring_xyz();
        let b = groebner_basis(&[p("x*y", &r)], &MonomialOrder::DegRevLex, &mut budget())
            .unwrap();
        let nf = normal_form(&p("x^2*y", &r), &b, &mut budget()).unwrap();
        assert!(nf.is_zero());
        let one = normal_form(&p("1", &r), &b, &mut budget()).unwrap();
        assert_eq!(one, p("1", &r));
    }

    #[test]
    fn normal_form_idempotent() {
        let r = ring_xyz();
        let b = groebner_basis(
            &[p("x^2 - y", &r), p("y^2 - z", &r)],
            &MonomialOrder::DegRevLex,
            &mut budget(),
        )
        .unwrap();
        let q = p("x^4 + x^2*y + z", &r);
        let nf = normal_form(&q, &b, &mut budget()).unwrap();
        let nf2 = normal_form(&nf, &b, &mut budget()).unwrap();
        assert_eq!(nf, nf2);
    }

    #[test]
    fn mora_membership_in_localized_ideal() {
        // locally (x^2 - x^3) = (x^2), so x^4 is a member
        let r = Ring::new(vec!["x"]);
        let b = standard_basis(
            &[p("x^2 - x^3", &r)],
            &MonomialOrder::NegDegRevLex,
            &mut budget(),
        )
        .unwrap();
        let nf = normal_form(&p("x^4", &r), &b, &mut budget()).unwrap();
        assert!(nf.is_zero());
        let nf1 = normal_form(&p("x", &r), &b, &mut budget()).unwrap();
        assert_eq!(nf1, p("x", &r));
    }

    #[test]
    fn staircase_maximal_ideal() {
        let r = ring_xyz();
        let b = standard_basis(
            &[p("x", &r), p("y", &r), p("z", &r)],
            &MonomialOrder::NegDegRevLex,
            &mut budget(),
        )
        .unwrap();
        assert_eq!(staircase_count(&b), Some(1));
    }

    #[test]
    fn staircase_square_of_maximal_ideal() {
        let r = ring_xyz();
        let gens: Vec<Poly> = ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]
            .iter()
            .map(|s| p(s, &r))
            .collect();
        let b = standard_basis(&gens, &MonomialOrder::NegDegRevLex, &mut budget()).unwrap();
        assert_eq!(staircase_count(&b), Some(4)); // 1, x, y, z
    }

    #[test]
    fn staircase_three_lines_reduction() {
        // dim C[x,y,z]/(x^2+y^2+z^2, xy, yz, xz) = 6
        let r = ring_xyz();
        let gens = vec![
            p("x*y", &r),
            p("y*z", &r),
            p("x*z", &r),
            p("x^2 + y^2 + z^2", &r),
        ];
        let b = standard_basis(&gens, &MonomialOrder::NegDegRevLex, &mut budget()).unwrap();
        assert_eq!(staircase_count(&b), Some(6));
        let g = groebner_basis(&gens, &MonomialOrder::DegRevLex, &mut budget()).unwrap();
        assert_eq!(staircase_count(&g), Some(6));
    }

    #[test]
    fn staircase_infinite_for_curve() {
        let r = ring_xyz();
        let b = groebner_basis(
            &[p("x*y", &r), p("y*z", &r), p("x*z", &r)],
            &MonomialOrder::DegRevLex,
            &mut budget(),
        )
        .unwrap();
        assert_eq!(staircase_count(&b), None);
    }

    #[test]
    fn basis_canonical_under_permutation() {
        let r = ring_xyz();
        let gens = vec![
            p("x*y", &r),
            p("y*z", &r),
            p("x*z", &r),
            p("x^2 + y^2 + z^2", &r),
        ];
        let mut permuted = gens.clone();
        permuted.reverse();
        for order in [MonomialOrder::DegRevLex] {
            let a = groebner_basis(&gens, &order, &mut budget()).unwrap();
            let b = groebner_basis(&permuted, &order, &mut budget()).unwrap();
            assert_eq!(a.gens, b.gens);
        }
        let a = standard_basis(&gens, &MonomialOrder::NegDegRevLex, &mut budget()).unwrap();
        let b = standard_basis(&permuted, &MonomialOrder::NegDegRevLex, &mut budget()).unwrap();
        assert_eq!(a.gens, b.gens);
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let r = ring_xyz();
        let mut tiny = Budget::new(3);
        let res = groebner_basis(
            &[p("x^2 - y", &r), p("y^2 - z", &r), p("z^2 - x", &r)],
            &MonomialOrder::DegRevLex,
            &mut tiny,
        );
        assert!(matches!(res, Err(Error::BudgetExceeded)));
    }
}
