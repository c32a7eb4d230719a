//! Brute-force oracles shared by the integration tests. Everything here reads
//! a graph through `order` and `has_edge` only, and recomputes invariants and
//! class membership from subset tables without touching the library's
//! algorithms.
#![allow(dead_code)]

use perflab::{Certificate, Class, ClassVerdict, Graph, VertexSet};

pub const ORACLE_CAP: usize = 14;

/// Vertex pairs (i, j), i < j, in a fixed order; bit k of a labeled-graph
/// code is the pair at index k.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

pub fn labeled(n: usize, code: u64, pairs: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| code >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Chromatic number by trying every assignment of k colors, k = 0, 1, ...
pub fn chi_all_assignments(g: &Graph) -> usize {
    let n = g.order();
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect();
    for k in 0..=n {
        let total = k.pow(n as u32);
        let mut colors = vec![0usize; n];
        for code in 0..total {
            let mut c = code;
            for slot in colors.iter_mut() {
                *slot = c % k.max(1);
                c /= k.max(1);
            }
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    unreachable!("n colors always suffice")
}

/// Clique number by testing every vertex subset.
pub fn omega_all_subsets(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() > best
            && vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        {
            best = vs.len();
        }
    }
    best
}

/// Subset tables of ω, χ and perfection for one graph.
pub struct Oracle {
    pub n: usize,
    adj: Vec<u32>,
    independent: Vec<bool>,
    pub omega: Vec<u8>,
    pub chi: Vec<u8>,
    pub perfect: Vec<bool>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Oracle {
        let n = g.order();
        assert!(
            n <= ORACLE_CAP,
            "oracle tables limited to {ORACLE_CAP} vertices"
        );
        let adj: Vec<u32> = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && g.has_edge(u, v))
                    .fold(0, |m, v| m | 1 << v)
            })
            .collect();
        let size = 1usize << n;
        let mut independent = vec![true; size];
        let mut omega = vec![0u8; size];
        for t in 1..size {
            let v = t.trailing_zeros() as usize;
            let rest = t & !(1 << v);
            independent[t] = independent[rest] && adj[v] as usize & rest == 0;
            omega[t] = omega[rest].max(1 + omega[rest & adj[v] as usize]);
        }
        let mut chi = vec![0u8; size];
        for t in 1..size {
            let v = t.trailing_zeros() as usize;
            let rest = t & !(1 << v);
            let mut best = u8::MAX;
            let mut sub = rest;
            loop {
                let class = sub | 1 << v;
                if independent[class] {
                    best = best.min(1 + chi[t & !class]);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            chi[t] = best;
        }
        let mut perfect = vec![true; size];
        for t in 1..size {
            perfect[t] = chi[t] == omega[t]
                && (0..n)
                    .filter(|&u| t >> u & 1 == 1)
                    .all(|u| perfect[t & !(1 << u)]);
        }
        Oracle {
            n,
            adj,
            independent,
            omega,
            chi,
            perfect,
        }
    }

    pub fn full(&self) -> usize {
        (1usize << self.n) - 1
    }

    fn submasks(t: usize) -> impl Iterator<Item = usize> {
        let mut next = Some(t);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & t) };
            Some(cur)
        })
    }

    pub fn is_independent(&self, t: usize) -> bool {
        self.independent[t]
    }

    pub fn k_colorable(&self, k: usize) -> bool {
        self.chi[self.full()] as usize <= k
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    fn two_perfect(&self) -> bool {
        let f = self.full();
        Self::submasks(f).any(|a| self.perfect[a] && self.perfect[f & !a])
    }

    fn stable_perfect(&self) -> bool {
        let f = self.full();
        Self::submasks(f).any(|s| self.independent[s] && self.perfect[f & !s])
    }

    fn perfectly_divisible_at(&self, h: usize) -> bool {
        h == 0 || Self::submasks(h).any(|b| self.omega[b] < self.omega[h] && self.perfect[h & !b])
    }

    fn two_divisible_at(&self, h: usize) -> bool {
        self.omega[h] < 2
            || Self::submasks(h)
                .any(|a| self.omega[a] < self.omega[h] && self.omega[h & !a] < self.omega[h])
    }

    pub fn holds(&self, class: Class) -> bool {
        let f = self.full();
        match class {
            Class::Perfect => self.perfect[f],
            Class::TwoPerfect => self.two_perfect(),
            Class::StablePerfect => self.stable_perfect(),
            Class::Nice => (0..=f).all(|h| self.chi[h] <= self.omega[h] + 1),
            Class::PerfectlyDivisible => (0..=f).all(|h| self.perfectly_divisible_at(h)),
            Class::TwoDivisible => (0..=f).all(|h| self.two_divisible_at(h)),
        }
    }

    /// Length of a shortest odd hole, if any.
    pub fn shortest_odd_hole(&self) -> Option<usize> {
        (0..=self.full())
            .filter(|&t| self.is_odd_hole_set(t))
            .map(|t| t.count_ones() as usize)
            .min()
    }

    // A vertex set induces a cycle iff it is connected and 2-regular.
    fn is_odd_hole_set(&self, t: usize) -> bool {
        let k = t.count_ones();
        if k < 5 || k.is_multiple_of(2) {
            return false;
        }
        let regular = (0..self.n)
            .filter(|&u| t >> u & 1 == 1)
            .all(|u| (self.adj[u] as usize & t).count_ones() == 2);
        if !regular {
            return false;
        }
        let start = t.trailing_zeros() as usize;
        let mut seen = 1usize << start;
        let mut frontier = seen;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[u] as usize & t & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == t
    }

    /// Checks an odd-cycle witness (in cyclic order) for induced-ness, in the
    /// graph itself or in its complement.
    pub fn is_induced_odd_cycle(&self, cycle: &[usize], in_complement: bool) -> bool {
        let k = cycle.len();
        if k < 5 || k.is_multiple_of(2) || cycle.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mut distinct = cycle.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != k {
            return false;
        }
        let edge = |u: usize, v: usize| self.has_edge(u, v) != in_complement;
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                edge(cycle[i], cycle[j]) == consecutive
            })
        })
    }

    fn bits(&self, s: VertexSet) -> Result<usize, String> {
        let b = s.bits() as usize;
        if b & !self.full() != 0 {
            return Err("vertex set out of range".into());
        }
        Ok(b)
    }

    fn partition(&self, a: VertexSet, b: VertexSet) -> Result<(usize, usize), String> {
        let (a, b) = (self.bits(a)?, self.bits(b)?);
        if a & b != 0 || a | b != self.full() {
            return Err("not a partition of the vertex set".into());
        }
        Ok((a, b))
    }

    /// Re-checks a verdict against the oracle: the certificate must prove
    /// what it claims and `holds` must match brute-force membership.
    pub fn check(&self, v: &ClassVerdict) -> Result<(), String> {
        let truth = self.holds(v.class);
        if truth != v.holds {
            return Err(format!(
                "{} reported {} but the oracle says {truth}",
                v.class, v.holds
            ));
        }
        self.check_certificate(v)
    }

    pub fn check_certificate(&self, v: &ClassVerdict) -> Result<(), String> {
        use Certificate as C;
        let f = self.full();
        let ok = |cond: bool, msg: &str| if cond { Ok(()) } else { Err(msg.to_string()) };
        match (&v.certificate, v.holds) {
            (C::Coloring(colors), true) => {
                ok(colors.len() == self.n, "coloring length")?;
                let proper = (0..self.n).all(|u| {
                    (u + 1..self.n).all(|w| !self.has_edge(u, w) || colors[u] != colors[w])
                });
                ok(proper, "coloring not proper")?;
                let mut used = colors.clone();
                used.sort_unstable();
                used.dedup();
                ok(
                    used.len() <= self.omega[f] as usize + 1,
                    "coloring uses more than omega + 1 colors",
                )
            }
            (C::Bipartition { a, b }, true) => {
                let (a, b) = self.partition(*a, *b)?;
                ok(
                    self.independent[a] && self.independent[b],
                    "bipartition side has an edge",
                )
            }
            (C::Partition2 { a, b }, true) => {
                let (a, b) = self.partition(*a, *b)?;
                match v.class {
                    Class::TwoPerfect => ok(self.perfect[a] && self.perfect[b], "side not perfect"),
                    Class::PerfectlyDivisible => ok(
                        self.perfect[a] && self.omega[b] < self.omega[f],
                        "not a perfect division",
                    ),
                    Class::TwoDivisible => ok(
                        self.omega[a] < self.omega[f] && self.omega[b] < self.omega[f],
                        "not a 2-division",
                    ),
                    _ => Err("partition certificate on the wrong class".into()),
                }
            }
            (C::StableSet(s), true) => {
                let s = self.bits(*s)?;
                ok(
                    self.independent[s] && self.perfect[f & !s],
                    "stable set removal does not leave a perfect graph",
                )
            }
            (C::NoOddHoleOrAntihole, true) => ok(self.perfect[f], "graph is imperfect"),
            (C::Vacuous, true) => ok(self.n == 0 || self.omega[f] < 2, "condition is not vacuous"),
            (C::OddHole(c), false) => ok(
                self.is_induced_odd_cycle(c, false),
                "not an induced odd cycle",
            ),
            (C::OddAntihole(c), false) => ok(
                self.is_induced_odd_cycle(c, true),
                "not an induced odd antihole",
            ),
            (
                C::Obstruction {
                    vertices,
                    chi,
                    omega,
                },
                false,
            ) => {
                let h = self.bits(*vertices)?;
                ok(
                    *omega == self.omega[h] as usize,
                    "obstruction clique number",
                )?;
                if let Some(c) = chi {
                    ok(*c == self.chi[h] as usize, "obstruction chromatic number")?;
                }
                let violated = match v.class {
                    Class::Perfect => self.chi[h] != self.omega[h],
                    Class::Nice => self.chi[h] > self.omega[h] + 1,
                    Class::PerfectlyDivisible => !self.perfectly_divisible_at(h),
                    Class::TwoDivisible => !self.two_divisible_at(h),
                    _ => false,
                };
                ok(violated, "obstruction does not violate the class")
            }
            (C::NotColorable { k }, false) => ok(!self.k_colorable(*k), "graph is colorable"),
            (C::Exhausted, false) => ok(!self.holds(v.class), "a witness exists"),
            (c, holds) => Err(format!(
                "unexpected {} certificate for {} = {holds}",
                c.kind(),
                v.class
            )),
        }
    }
}
