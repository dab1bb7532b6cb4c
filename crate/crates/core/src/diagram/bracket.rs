use std::collections::BTreeMap;

use super::oriented::OrientedDiagram;
use super::pd::PDCode;
use super::poly::LaurentPolynomial;
use crate::error::{Error, Result};

/// Largest diagram the state sum will expand.
pub const MAX_BRACKET_CROSSINGS: usize = 24;

/// Union-find with undo; no path compression so every union can be rolled back.
struct RollbackDsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
    log: Vec<Option<(usize, usize, bool)>>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n).collect(), rank: vec![0; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns whether two classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            self.log.push(None);
            return false;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let bumped = self.rank[a] == self.rank[b];
        self.parent[b] = a;
        if bumped {
            self.rank[a] += 1;
        }
        self.log.push(Some((a, b, bumped)));
        true
    }

    fn undo(&mut self) {
        if let Some(Some((a, b, bumped))) = self.log.pop() {
            self.parent[b] = b;
            if bumped {
                self.rank[a] -= 1;
            }
        }
    }
}

struct StateSum<'a> {
    crossings: &'a [[usize; 4]],
    dsu: RollbackDsu,
    // histogram[a_smoothings][loops]
    histogram: Vec<Vec<u64>>,
}

impl StateSum<'_> {
    fn run(&mut self, depth: usize, a_count: usize, merges: usize) {
        if depth == self.crossings.len() {
            let loops = self.dsu.parent.len() - merges;
            self.histogram[a_count][loops] += 1;
            return;
        }
        let [a, b, c, d] = self.crossings[depth];
        // A-smoothing joins a–b and c–d.
        let m = self.dsu.union(a, b) as usize + self.dsu.union(c, d) as usize;
        self.run(depth + 1, a_count + 1, merges + m);
        self.dsu.undo();
        self.dsu.undo();
        // B-smoothing joins a–d and b–c.
        let m = self.dsu.union(a, d) as usize + self.dsu.union(b, c) as usize;
        self.run(depth + 1, a_count, merges + m);
        self.dsu.undo();
        self.dsu.undo();
    }
}

/// Kauffman bracket `⟨D⟩ ∈ ℤ[A, A⁻¹]` by a full state sum over all `2^c` smoothings.
///
/// Normalized so that a single crossingless circle has bracket 1; each further
/// loop contributes `d = -A² - A⁻²`.
pub fn kauffman_bracket(pd: &PDCode) -> Result<LaurentPolynomial> {
    if !pd.is_closed() {
        return Err(Error::Domain("the bracket needs a closed diagram".into()));
    }
    let c = pd.crossings.len();
    if c > MAX_BRACKET_CROSSINGS {
        return Err(Error::Resource(format!(
            "{c} crossings exceeds the state-sum cap of {MAX_BRACKET_CROSSINGS}"
        )));
    }
    let ports = pd.arc_ports()?;
    if c == 0 {
        return Ok(if pd.loops == 0 { LaurentPolynomial::one() } else { loop_value().pow(pd.loops as u32 - 1) });
    }
    let dense: BTreeMap<usize, usize> = ports.keys().enumerate().map(|(i, &a)| (a, i)).collect();
    let crossings: Vec<[usize; 4]> = pd.crossings.iter().map(|x| x.map(|a| dense[&a])).collect();
    let arcs = dense.len();
    let mut sum = StateSum {
        crossings: &crossings,
        dsu: RollbackDsu::new(arcs),
        histogram: vec![vec![0; arcs + 1]; c + 1],
    };
    sum.run(0, 0, 0);

    let d = loop_value();
    let max_loops = arcs + pd.loops;
    let mut d_pows = vec![LaurentPolynomial::one()];
    for i in 1..max_loops {
        d_pows.push(&d_pows[i - 1] * &d);
    }
    let mut out = LaurentPolynomial::zero();
    for (a_count, row) in sum.histogram.iter().enumerate() {
        let exponent = a_count as i64 - (c - a_count) as i64;
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let total = loops + pd.loops;
            let term = d_pows[total - 1].shift(exponent);
            let count = i64::try_from(count).expect("state count fits in i64");
            for (e, k) in term.terms() {
                out.add_term(e, k * count);
            }
        }
    }
    Ok(out)
}

fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(1, &[(2, -1), (-2, -1)])
}

/// Jones polynomial `V(t) = (-A³)^(-w) ⟨D⟩` at `A = t^(-1/4)`, exponents in quarter units.
pub fn jones(od: &OrientedDiagram) -> Result<LaurentPolynomial> {
    let bracket = kauffman_bracket(od.pd())?;
    let w = od.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * w);
    let mut out = normalized.scale_exponents(-1, 4);
    if sign < 0 {
        out = -&out;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(1, terms)
    }

    #[test]
    fn empty_and_unknot() {
        assert_eq!(kauffman_bracket(&PDCode::default()).unwrap(), LaurentPolynomial::one());
        let unknot = PDCode { loops: 1, ..PDCode::default() };
        assert_eq!(kauffman_bracket(&unknot).unwrap(), LaurentPolynomial::one());
        let two = PDCode { loops: 2, ..PDCode::default() };
        assert_eq!(kauffman_bracket(&two).unwrap(), poly(&[(2, -1), (-2, -1)]));
    }

    #[test]
    fn positive_kink_is_minus_a_cubed() {
        // Two states: A gives two loops, B gives one: A·d + A⁻¹ = -A³.
        let kink = PDCode::closed(vec![[0, 0, 1, 1]]);
        assert_eq!(kauffman_bracket(&kink).unwrap(), poly(&[(3, -1)]));
        let od = OrientedDiagram::from_pd(kink).unwrap();
        assert_eq!(od.writhe(), 1);
        assert_eq!(jones(&od).unwrap(), LaurentPolynomial::from_terms(4, &[(0, 1)]));
    }

    #[test]
    fn crossing_cap_is_a_resource_error() {
        let crossings = (0..25).map(|i| [2 * i, 2 * i, 2 * i + 1, 2 * i + 1]).collect();
        let pd = PDCode::closed(crossings);
        assert!(matches!(kauffman_bracket(&pd), Err(Error::Resource(_))));
    }

    #[test]
    fn open_diagram_rejected() {
        let pd = PDCode::from_json(r#"{"crossings":[],"open_ends":{"NW":0,"NE":0,"SW":1,"SE":1}}"#).unwrap();
        assert!(kauffman_bracket(&pd).is_err());
    }

    #[test]
    fn hopf_bracket() {
        // ⟨Hopf⟩ = -A⁴ - A⁻⁴ for either chirality.
        let pd = PDCode::closed(vec![[0, 2, 1, 3], [2, 0, 3, 1]]);
        assert_eq!(kauffman_bracket(&pd).unwrap(), poly(&[(4, -1), (-4, -1)]));
    }
}
