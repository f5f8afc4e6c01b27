//! Brute-force finite group models built from the semidirect and cyclic-extension presentations
//! of the torsion subgroup, with no use of the collection formulas in [`crate::group`].
//!
//! The torsion model is `E = <x, y>` with `x` of order `(beta-1)²`, `y x y⁻¹ = x^beta`, and
//! `y^|beta-1| = 1` (beta even) or `y^|beta-1| = x^((beta-1)²/2)` (beta odd). The quotient model
//! adjoins `z` of order `e` (the first central power of `A`) acting by `x^z = x y⁻¹`, `y^z = y`.
//! Labels are `(a, k, j)` meaning `z^a y^k x^j`, which lines up with `A^a C^c B^b`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// `(a, k, j)` exponents of `z^a y^k x^j`.
pub type Label = (u64, u64, u64);

#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    labels: Vec<Label>,
    index: HashMap<Label, u32>,
    product: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

fn inv_mod(a: i128, m: i128) -> Option<i128> {
    let (g, x, _) = egcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

impl FiniteGroupTable {
    /// Tabulates `mul` on `labels`, which must be closed under it and contain `identity`.
    pub fn from_fn(
        labels: Vec<Label>,
        identity: Label,
        mul: impl Fn(Label, Label) -> Label,
    ) -> Result<Self> {
        let size = labels.len();
        let index: HashMap<Label, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (*l, i as u32))
            .collect();
        let mut product = vec![0u32; size * size];
        for (i, &x) in labels.iter().enumerate() {
            for (j, &y) in labels.iter().enumerate() {
                let z = mul(x, y);
                product[i * size + j] = *index.get(&z).ok_or_else(|| {
                    Error::InvalidAutomorphism(format!("table not closed: {x:?}*{y:?}={z:?}"))
                })?;
            }
        }
        let identity = index[&identity] as usize;
        let mut inverse = vec![u32::MAX; size];
        for i in 0..size {
            for j in 0..size {
                if product[i * size + j] as usize == identity {
                    inverse[i] = j as u32;
                    break;
                }
            }
        }
        Ok(FiniteGroupTable {
            labels,
            index,
            product,
            identity,
            inverse,
        })
    }

    /// Cyclic group of order `m`, labels `(0, 0, j)`.
    pub fn cyclic(m: u64) -> Self {
        let labels = (0..m).map(|j| (0, 0, j)).collect();
        Self::from_fn(labels, (0, 0, 0), |x, y| (0, 0, (x.2 + y.2) % m))
            .expect("cyclic group is closed")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, i: usize) -> Label {
        self.labels[i]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn index_of(&self, l: Label) -> Option<usize> {
        self.index.get(&l).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.product[i * self.size() + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, i))
    }

    pub fn commutator(&self, i: usize, j: usize) -> usize {
        let ij = self.mul(i, j);
        let ji = self.mul(j, i);
        self.mul(self.inv(ji), ij)
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut k = 1;
        let mut acc = i;
        while acc != self.identity {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    /// Identity, inverse and associativity laws. Associativity is checked on every triple when
    /// `full`, otherwise on triples whose middle entry runs over a stride of the table.
    pub fn check_axioms(&self, full: bool) -> bool {
        let n = self.size();
        if self.inverse.contains(&u32::MAX) {
            return false;
        }
        for i in 0..n {
            if self.mul(i, self.identity) != i || self.mul(self.identity, i) != i {
                return false;
            }
            if self.mul(self.inv(i), i) != self.identity {
                return false;
            }
        }
        let step = if full { 1 } else { (n / 17).max(1) };
        for i in 0..n {
            for j in (0..n).step_by(step) {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Least subset containing `gens` and the identity closed under the product, sorted.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = vec![self.identity];
        while let Some(g) = queue.pop_front() {
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                    queue.push_back(h);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn center_of(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&g| (0..self.size()).all(|h| self.mul(g, h) == self.mul(h, g)))
            .collect()
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .collect()
    }

    /// `{g : [g, h] ∈ Z for all h}`.
    pub fn second_center(&self) -> Vec<usize> {
        let mut in_center = vec![false; self.size()];
        for z in self.center_of() {
            in_center[z] = true;
        }
        (0..self.size())
            .filter(|&g| (0..self.size()).all(|h| in_center[self.commutator(g, h)]))
            .collect()
    }

    /// Lower central series `γ1 ⊇ γ2 ⊇ ...` down to the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.size()).collect();
        let mut series = vec![all.clone()];
        loop {
            let prev = series.last().unwrap();
            let mut comms: Vec<usize> = Vec::new();
            let mut seen = vec![false; self.size()];
            for &g in &all {
                for &h in prev {
                    let c = self.commutator(g, h);
                    if !seen[c] {
                        seen[c] = true;
                        comms.push(c);
                    }
                }
            }
            let next = self.subgroup_closure(&comms);
            if &next == prev {
                return series;
            }
            let done = next.len() == 1;
            series.push(next);
            if done {
                return series;
            }
        }
    }

    /// A small generating set, chosen greedily by element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.size()).collect();
        by_order.sort_by_key(|&g| std::cmp::Reverse(self.element_order(g)));
        let mut gens = Vec::new();
        let mut span = self.subgroup_closure(&gens);
        for g in by_order {
            if span.len() == self.size() {
                break;
            }
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.subgroup_closure(&gens);
            }
        }
        gens
    }

    /// Extends `gens[i] ↦ images[i]` along the Cayley graph; `None` unless it is a well-defined
    /// bijective homomorphism.
    pub fn extend_to_automorphism(&self, gens: &[usize], images: &[usize]) -> Option<Vec<u32>> {
        let n = self.size();
        let mut map = vec![u32::MAX; n];
        map[self.identity] = self.identity as u32;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(g) = queue.pop_front() {
            for (&s, &t) in gens.iter().zip(images) {
                let h = self.mul(g, s);
                let img = self.mul(map[g] as usize, t) as u32;
                if map[h] == u32::MAX {
                    map[h] = img;
                    queue.push_back(h);
                } else if map[h] != img {
                    return None;
                }
            }
        }
        let mut hit = vec![false; n];
        for &m in &map {
            if m == u32::MAX || hit[m as usize] {
                return None;
            }
            hit[m as usize] = true;
        }
        Some(map)
    }

    /// Every automorphism of the table, as permutations of indices.
    ///
    /// Candidate images of a generating set are filtered by element order before the Cayley-graph
    /// extension check.
    pub fn exhaustive_automorphisms(&self, cap: usize) -> Result<Vec<Vec<u32>>> {
        if self.size() > cap {
            return Err(Error::CapExceeded {
                required: self.size().into(),
                cap: cap as u64,
            });
        }
        let gens = self.generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..self.size())
                    .filter(|&h| self.element_order(h) == o)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let images: Vec<usize> = choice
                .iter()
                .zip(&candidates)
                .map(|(&c, cands)| cands[c])
                .collect();
            if let Some(map) = self.extend_to_automorphism(&gens, &images) {
                out.push(map);
            }
            // odometer over candidate tuples
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    out.sort();
                    return Ok(out);
                }
                choice[pos] += 1;
                if choice[pos] < candidates[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Constants of the presentation model for one beta, in machine integers.
#[derive(Debug, Clone, Copy)]
struct ModelParams {
    n: u64,
    n2: u64,
    odd: bool,
    /// `beta⁻¹ mod n2`, so `y⁻¹ x y = x^beta_inv`.
    beta_inv: u64,
}

impl ModelParams {
    fn new(beta: i64) -> Result<Self> {
        if beta == 1 {
            return Err(Error::UnsupportedBeta);
        }
        if beta == 0 || beta == 2 {
            return Err(Error::DegenerateBeta(beta.into()));
        }
        let n = (beta - 1).unsigned_abs();
        let n2 = n * n;
        let beta_inv = inv_mod(beta as i128, n2 as i128).expect("beta is a unit mod (beta-1)^2");
        Ok(ModelParams {
            n,
            n2,
            odd: beta.rem_euclid(2) == 1,
            beta_inv: beta_inv as u64,
        })
    }

    /// `beta_inv^k mod n2` for `k` in `0..n`.
    fn twist_powers(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        let mut acc = 1u128 % self.n2 as u128;
        for _ in 0..self.n {
            out.push(acc as u64);
            acc = acc * self.beta_inv as u128 % self.n2 as u128;
        }
        out
    }

    /// Product in `E` of `y^k1 x^j1` and `y^k2 x^j2`.
    fn mul_e(&self, tw: &[u64], (k1, j1): (u64, u64), (k2, j2): (u64, u64)) -> (u64, u64) {
        let n2 = self.n2 as u128;
        let mut j = (j1 as u128 * tw[k2 as usize] as u128 + j2 as u128) % n2;
        let mut k = k1 + k2;
        if k >= self.n {
            k -= self.n;
            if self.odd {
                j = (j + n2 / 2) % n2;
            }
        }
        (k, j as u64)
    }
}

fn check_cap(required: u128, cap: u64) -> Result<()> {
    if required > cap as u128 {
        Err(Error::CapExceeded {
            required: required.into(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Table of `T(beta)` from its presentation. Label `(0, k, j)` is `y^k x^j`, the image of
/// `C^k B^j` under `B ↦ x`, `C ↦ y`.
pub fn build_torsion_model(beta: i64, cap: u64) -> Result<FiniteGroupTable> {
    let mp = ModelParams::new(beta)?;
    check_cap(mp.n as u128 * mp.n2 as u128, cap)?;
    let tw = mp.twist_powers();
    let mut labels = Vec::with_capacity((mp.n * mp.n2) as usize);
    for k in 0..mp.n {
        for j in 0..mp.n2 {
            labels.push((0, k, j));
        }
    }
    FiniteGroupTable::from_fn(labels, (0, 0, 0), |x, y| {
        let (k, j) = mp.mul_e(&tw, (x.1, x.2), (y.1, y.2));
        (0, k, j)
    })
}

/// First central power of `A`: `|beta-1|` for even beta, `2|beta-1|` for odd beta.
pub fn central_a_exponent(beta: i64) -> u64 {
    let n = (beta - 1).unsigned_abs();
    if beta.rem_euclid(2) == 0 {
        n
    } else {
        2 * n
    }
}

/// Table of `G(beta) / <A^e>` as `<z> ⋉ E` with `x^z = x y⁻¹`, `y^z = y`; label `(a, k, j)` is
/// `z^a y^k x^j`, the image of `A^a C^k B^j`.
pub fn build_finite_quotient(beta: i64, cap: u64) -> Result<FiniteGroupTable> {
    let mp = ModelParams::new(beta)?;
    let e = central_a_exponent(beta);
    check_cap(e as u128 * mp.n as u128 * mp.n2 as u128, cap)?;
    let tw = mp.twist_powers();
    let (n, n2) = (mp.n, mp.n2);
    let idx = |(k, j): (u64, u64)| (k * n2 + j) as usize;
    let size_e = (n * n2) as usize;
    // phi(w) = z⁻¹ w z: x ↦ x y⁻¹, y ↦ y, so phi(y^k x^j) = y^k (x y⁻¹)^j
    let y_inv = (n - 1, if mp.odd { n2 / 2 } else { 0 });
    let x_yinv = mp.mul_e(&tw, (0, 1), y_inv);
    let mut xy_pows = Vec::with_capacity(n2 as usize);
    let mut acc = (0, 0);
    for _ in 0..n2 {
        xy_pows.push(acc);
        acc = mp.mul_e(&tw, acc, x_yinv);
    }
    let mut phi = vec![(0u64, 0u64); size_e];
    for k in 0..n {
        for j in 0..n2 {
            phi[idx((k, j))] = mp.mul_e(&tw, (k, 0), xy_pows[j as usize]);
        }
    }
    // powers phi^a for a in 0..e, each a lookup table on E
    let mut phi_pows: Vec<Vec<(u64, u64)>> = Vec::with_capacity(e as usize);
    let id_map: Vec<(u64, u64)> = (0..n)
        .flat_map(|k| (0..n2).map(move |j| (k, j)))
        .collect();
    phi_pows.push(id_map.clone());
    for a in 1..=e as usize {
        let next: Vec<(u64, u64)> = phi_pows[a - 1].iter().map(|&w| phi[idx(w)]).collect();
        if a == e as usize {
            if next != id_map {
                return Err(Error::InvalidAutomorphism(format!(
                    "z^{e} does not act trivially on the torsion model of beta = {beta}"
                )));
            }
        } else {
            phi_pows.push(next);
        }
    }
    let mut labels = Vec::with_capacity(e as usize * size_e);
    for a in 0..e {
        for k in 0..n {
            for j in 0..n2 {
                labels.push((a, k, j));
            }
        }
    }
    FiniteGroupTable::from_fn(labels, (0, 0, 0), |(a1, k1, j1), (a2, k2, j2)| {
        let moved = phi_pows[a2 as usize][idx((k1, j1))];
        let (k, j) = mp.mul_e(&tw, moved, (k2, j2));
        ((a1 + a2) % e, k, j)
    })
}
