//! Permutation groups on `0..degree` via a base and strong generating set.
//!
//! Permutations are image arrays and compose left to right, matching the right
//! actions used everywhere else in the crate: `(a * b)[i] = b[a[i]]`.

use num_bigint::BigUint;

pub type Perm = Vec<u32>;

pub fn identity(degree: usize) -> Perm {
    (0..degree as u32).collect()
}

pub fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

/// `a` then `b`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Perm {
    let mut out = vec![0u32; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

/// Orbits of `<gens>` on `0..degree`, each sorted, ordered by least element.
pub fn orbits(degree: usize, gens: &[Perm]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start as u32];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k] as usize;
            k += 1;
            for g in gens {
                let q = g[p] as usize;
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q as u32);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

struct Level {
    base_point: u32,
    gens: Vec<Perm>,
    /// Orbit of the base point in discovery order.
    orbit: Vec<u32>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(degree: usize, base_point: u32) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base_point as usize] = Some(identity(degree));
        self.orbit = vec![self.base_point];
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k] as usize;
            k += 1;
            for g in &self.gens {
                let q = g[p] as usize;
                if self.transversal[q].is_none() {
                    let u = compose(self.transversal[p].as_ref().unwrap(), g);
                    self.transversal[q] = Some(u);
                    self.orbit.push(q as u32);
                }
            }
        }
    }
}

/// A stabilizer chain built by deterministic Schreier–Sims.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !is_identity(g))
            .cloned()
            .collect();
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return chain;
        }
        // first base point: least point of a largest orbit
        let first = orbits(degree, &gens)
            .into_iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .map(|o| o[0])
            .unwrap();
        let mut level = Level::new(degree, first);
        level.gens = gens.clone();
        level.rebuild(degree);
        chain.levels.push(level);
        // every generator must move some base point
        for g in &gens {
            if chain.levels.iter().all(|l| g[l.base_point as usize] == l.base_point) {
                let point = chain.pick_base_point(g);
                let mut level = Level::new(degree, point);
                level.gens = vec![g.clone()];
                level.rebuild(degree);
                chain.levels.push(level);
            }
        }
        for i in 1..chain.levels.len() {
            let fixed: Vec<u32> = chain.levels[..i].iter().map(|l| l.base_point).collect();
            let lg: Vec<Perm> = gens
                .iter()
                .filter(|g| fixed.iter().all(|&b| g[b as usize] == b))
                .cloned()
                .collect();
            chain.levels[i].gens = lg;
            chain.levels[i].rebuild(degree);
        }
        chain.run();
        chain
    }

    /// A moved point of `h` lying in a longest cycle of `h`.
    fn pick_base_point(&self, h: &[u32]) -> u32 {
        let mut best: Option<(usize, u32)> = None;
        let mut seen = vec![false; self.degree];
        for start in 0..self.degree {
            if seen[start] || h[start] as usize == start {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = h[p] as usize;
            }
            if best.is_none_or(|(l, _)| len > l) {
                best = Some((len, start as u32));
            }
        }
        best.expect("non-identity permutation has a moved point").1
    }

    fn run(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            let orbit = self.levels[li].orbit.clone();
            let ngens = self.levels[li].gens.len();
            for &beta in &orbit {
                for gi in 0..ngens {
                    let level = &self.levels[li];
                    let gen = &level.gens[gi];
                    let gamma = gen[beta as usize] as usize;
                    let u_beta = level.transversal[beta as usize].as_ref().unwrap();
                    let u_gamma = level.transversal[gamma].as_ref().unwrap();
                    let ug = compose(u_beta, gen);
                    if &ug == u_gamma {
                        continue;
                    }
                    let schreier = compose(&ug, &inverse(u_gamma));
                    let (h, j) = self.strip_from(schreier, li + 1);
                    if j < self.levels.len() || !is_identity(&h) {
                        if j == self.levels.len() {
                            let point = self.pick_base_point(&h);
                            self.levels.push(Level::new(self.degree, point));
                        }
                        for l in li + 1..=j {
                            self.levels[l].gens.push(h.clone());
                            self.levels[l].rebuild(self.degree);
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    fn strip_from(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let p = g[level.base_point as usize] as usize;
            match &level.transversal[p] {
                None => return (g, l),
                Some(u) => g = compose(&g, &inverse(u)),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &[u32]) -> bool {
        if g.len() != self.degree {
            return false;
        }
        let (h, j) = self.strip_from(g.to_vec(), 0);
        j == self.levels.len() && is_identity(&h)
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}

/// Exhaustive closure, for cross-checking small groups. `None` if larger than `cap`.
pub fn enumerate_elements(degree: usize, gens: &[Perm], cap: usize) -> Option<Vec<Perm>> {
    use std::collections::HashSet;
    let id = identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        let h = out[k].clone();
        k += 1;
        for g in gens {
            let next = compose(&h, g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return None;
                }
                out.push(next);
            }
        }
    }
    Some(out)
}
