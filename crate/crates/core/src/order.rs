//! Composable term orders on the commutative symbol image of Weyl monomials.
//!
//! Orders are data: a sequence of comparator layers (total degree, weighted
//! degree, block chains with per-block inner orders). Keeping them as
//! descriptors lets reports print exactly which order produced an initial
//! monomial — the computations here use three different orders and mixing
//! them up silently is the main hazard.

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::monomial::Monomial;
use crate::vars::{VarId, VarKind, VarUniverse};

/// Integer weights on the differential variables; the paired coordinate
/// automatically carries the opposite weight, slack variables and `h` carry
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<(VarId, i64)>,
}

impl WeightVector {
    pub fn new(weights: Vec<(VarId, i64)>) -> Self {
        WeightVector { weights }
    }

    pub fn zero() -> Self {
        WeightVector { weights: Vec::new() }
    }

    pub fn weight_of(&self, v: VarId) -> i64 {
        self.weights
            .iter()
            .find_map(|&(w, k)| (w == v).then_some(k))
            .unwrap_or(0)
    }

    /// Dense `(-w, w)`-map over the whole universe: `+w` on a differential
    /// variable, `-w` on its paired coordinate, `0` elsewhere.
    pub fn full_map(&self, u: &VarUniverse) -> WeightMap {
        let mut map = vec![0i64; u.len()];
        for &(v, k) in &self.weights {
            debug_assert!(u.is_differential(v));
            map[v.index()] += k;
            if let Some(p) = u.pair(v) {
                map[p.index()] -= k;
            }
        }
        WeightMap(map)
    }
}

/// Dense per-variable weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap(pub Vec<i64>);

impl WeightMap {
    pub fn degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.0)
    }
}

/// The `(-w, w)`-degree of a monomial.
pub fn weight_degree(m: &Monomial, u: &VarUniverse, w: &WeightVector) -> i64 {
    w.full_map(u).degree(m)
}

#[derive(Clone, Debug)]
pub enum InnerOrder {
    /// Degree within the block first, then lexicographic along the listed
    /// variables (first listed is most significant).
    GradedLex,
    /// Pure lexicographic along the listed variables.
    Lex,
}

#[derive(Clone, Debug)]
pub struct Block {
    pub vars: Vec<VarId>,
    pub inner: InnerOrder,
}

#[derive(Clone, Debug)]
pub enum Layer {
    TotalDegree,
    WeightDegree(WeightMap),
    /// Blocks in decreasing significance; monomials are compared block by
    /// block on their restrictions.
    Blocks(Vec<Block>),
}

#[derive(Clone, Debug)]
pub struct TermOrder {
    pub name: String,
    pub layers: Vec<Layer>,
}

impl Block {
    fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.inner {
            InnerOrder::GradedLex => {
                let da: u64 = self.vars.iter().map(|&v| a.exp(v) as u64).sum();
                let db: u64 = self.vars.iter().map(|&v| b.exp(v) as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => self.lex(a, b),
                    ord => ord,
                }
            }
            InnerOrder::Lex => self.lex(a, b),
        }
    }

    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.vars {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for layer in &self.layers {
            let ord = match layer {
                Layer::TotalDegree => a.total_degree().cmp(&b.total_degree()),
                Layer::WeightDegree(w) => w.degree(a).cmp(&w.degree(b)),
                Layer::Blocks(blocks) => {
                    let mut out = Ordering::Equal;
                    for block in blocks {
                        match block.compare(a, b) {
                            Ordering::Equal => continue,
                            ord => {
                                out = ord;
                                break;
                            }
                        }
                    }
                    out
                }
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    pub fn max<'a, I: IntoIterator<Item = &'a Monomial>>(&self, iter: I) -> Option<&'a Monomial> {
        iter.into_iter().reduce(|best, m| {
            if self.compare(m, best) == Ordering::Greater {
                m
            } else {
                best
            }
        })
    }

    /// JSON descriptor listing layers and blocks by variable name.
    pub fn describe(&self, u: &VarUniverse) -> Value {
        let layers: Vec<Value> = self
            .layers
            .iter()
            .map(|layer| match layer {
                Layer::TotalDegree => json!({"layer": "total-degree"}),
                Layer::WeightDegree(w) => {
                    let nonzero: Vec<Value> = u
                        .all_vars()
                        .filter(|v| w.0[v.index()] != 0)
                        .map(|v| json!({"var": u.name(v), "weight": w.0[v.index()]}))
                        .collect();
                    json!({"layer": "weight-degree", "weights": nonzero})
                }
                Layer::Blocks(blocks) => {
                    let bs: Vec<Value> = blocks
                        .iter()
                        .map(|b| {
                            json!({
                                "vars": b.vars.iter().map(|&v| u.name(v)).collect::<Vec<_>>(),
                                "inner": match b.inner {
                                    InnerOrder::GradedLex => "graded-lex",
                                    InnerOrder::Lex => "lex",
                                },
                            })
                        })
                        .collect();
                    json!({"layer": "blocks", "blocks": bs})
                }
            })
            .collect();
        json!({"name": self.name, "layers": layers})
    }
}

/// Direction for the tie-breaker blocks whose inner order the construction
/// leaves unnamed (`{c_k}` and `{y_k}`); results must not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieDirection {
    IndexAscending,
    IndexDescending,
}

/// Block order `dr >> {dx_ij} >> {dy_k}` with graded lex inside the blocks
/// (`dx_11 > dx_12 > ...` row-major, `dy_1 > dy_2 > ...`). On a diagonal
/// universe this is exactly the order used for the diagonal-system basis; on
/// a full universe the off-diagonal `dx_ij` join the middle block.
pub fn make_prop2_order(u: &VarUniverse) -> TermOrder {
    TermOrder {
        name: "block-dr-dxx-dy".into(),
        layers: vec![Layer::Blocks(vec![
            Block { vars: vec![u.dr()], inner: InnerOrder::GradedLex },
            Block { vars: u.dx_vars(), inner: InnerOrder::GradedLex },
            Block { vars: u.dy_vars(), inner: InnerOrder::GradedLex },
        ])],
    }
}

/// Default order for rank computations: the same block order, which is a
/// well-order on the differential symbols.
pub fn make_default_r_order(u: &VarUniverse) -> TermOrder {
    make_prop2_order(u)
}

/// The homogenized order: total degree first, `(-w, w, 0)`-degree second,
/// then the block chain
/// `d >> r >> {a_pq} >> {b_k} >> {c_k} >> {y_k} >> dr >> {dx_ij, i<j} >>
/// {dx_ii} >> {dy_k} >> {x_ij, i<j} >> {x_ii} >> h`
/// with `b_1 > b_2 > ...` lexicographic inside `{b_k}`.
pub fn make_h_order(u: &VarUniverse, tie: TieDirection) -> TermOrder {
    assert!(u.has_slack() && u.has_h(), "homogenized order needs slack and h");
    let n1 = u.n() + 1;
    let w = make_weight(u);
    let dir = |mut vars: Vec<VarId>| -> Vec<VarId> {
        if tie == TieDirection::IndexDescending {
            vars.reverse();
        }
        vars
    };
    let a_vars: Vec<VarId> = {
        let mut v = Vec::new();
        for p in 1..=n1 {
            for qq in p..=n1 {
                v.push(u.slack_a(p, qq));
            }
        }
        v
    };
    let b_vars: Vec<VarId> = (1..=n1).map(|i| u.slack_b(i)).collect();
    let c_vars: Vec<VarId> = dir((1..=n1).map(|i| u.slack_c(i)).collect());
    let y_vars: Vec<VarId> = dir((1..=n1).map(|k| u.y(k)).collect());
    let dx_off: Vec<VarId> = {
        let mut v = Vec::new();
        for i in 1..=n1 {
            for j in (i + 1)..=n1 {
                v.push(u.dx(i, j));
            }
        }
        v
    };
    let dx_diag: Vec<VarId> = (1..=n1).map(|i| u.dx(i, i)).collect();
    let dy_vars: Vec<VarId> = (1..=n1).map(|k| u.dy(k)).collect();
    let x_off: Vec<VarId> = {
        let mut v = Vec::new();
        for i in 1..=n1 {
            for j in (i + 1)..=n1 {
                v.push(u.x(i, j));
            }
        }
        v
    };
    let x_diag: Vec<VarId> = (1..=n1).map(|i| u.x(i, i)).collect();

    let blocks = vec![
        Block { vars: vec![u.slack_d()], inner: InnerOrder::Lex },
        Block { vars: vec![u.r()], inner: InnerOrder::Lex },
        Block { vars: a_vars, inner: InnerOrder::Lex },
        Block { vars: b_vars, inner: InnerOrder::Lex },
        Block { vars: c_vars, inner: InnerOrder::Lex },
        Block { vars: y_vars, inner: InnerOrder::Lex },
        Block { vars: vec![u.dr()], inner: InnerOrder::Lex },
        Block { vars: dx_off, inner: InnerOrder::Lex },
        Block { vars: dx_diag, inner: InnerOrder::Lex },
        Block { vars: dy_vars, inner: InnerOrder::Lex },
        Block { vars: x_off, inner: InnerOrder::Lex },
        Block { vars: x_diag, inner: InnerOrder::Lex },
        Block { vars: vec![u.h()], inner: InnerOrder::Lex },
    ];
    TermOrder {
        name: "h-total-weight-block".into(),
        layers: vec![
            Layer::TotalDegree,
            Layer::WeightDegree(w.full_map(u)),
            Layer::Blocks(blocks),
        ],
    }
}

/// The deformation weight: `1` on every off-diagonal `dx_ij`, `0` elsewhere.
pub fn make_weight(u: &VarUniverse) -> WeightVector {
    let mut weights = Vec::new();
    for v in u.all_vars() {
        if let VarKind::Dx { i, j } = u.kind(v) {
            if i != j {
                weights.push((v, 1));
            }
        }
    }
    WeightVector::new(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VarUniverse;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_monomial(rng: &mut StdRng, u: &VarUniverse, max_exp: u32) -> Monomial {
        let pairs: Vec<(VarId, u32)> = u
            .all_vars()
            .filter_map(|v| {
                let e = rng.gen_range(0..=max_exp.min(2));
                (e > 0 && rng.gen_bool(0.4)).then_some((v, e))
            })
            .collect();
        Monomial::from_pairs(pairs).unwrap()
    }

    #[test]
    fn block_order_examples() {
        let u = VarUniverse::diagonal(1);
        let o = make_prop2_order(&u);
        // dr beats any power of dx11
        let dr = Monomial::var(u.dr());
        let dx_big = Monomial::var_pow(u.dx(1, 1), 10);
        assert_eq!(o.compare(&dr, &dx_big), Ordering::Greater);
        // dy1^2 > dy1*dy2 under graded lex with dy1 > dy2
        let d1sq = Monomial::var_pow(u.dy(1), 2);
        let d12 = Monomial::from_pairs([(u.dy(1), 1), (u.dy(2), 1)]).unwrap();
        assert_eq!(o.compare(&d1sq, &d12), Ordering::Greater);
        // reflexive
        assert_eq!(o.compare(&d12, &d12), Ordering::Equal);
    }

    #[test]
    fn weight_degree_examples() {
        let u = VarUniverse::full(1);
        let w = make_weight(&u);
        // conjugate pair cancels
        let m = Monomial::from_pairs([(u.x(1, 2), 1), (u.dx(1, 2), 1)]).unwrap();
        assert_eq!(weight_degree(&m, &u, &w), 0);
        // dx12 alone has weight 1
        assert_eq!(weight_degree(&Monomial::var(u.dx(1, 2)), &u, &w), 1);
        // x12 * dy1 * dy2 has weight -1
        let m = Monomial::from_pairs([(u.x(1, 2), 1), (u.dy(1), 1), (u.dy(2), 1)]).unwrap();
        assert_eq!(weight_degree(&m, &u, &w), -1);
    }

    #[test]
    fn weight_degree_is_additive() {
        let u = VarUniverse::full_slack_h(2);
        let w = make_weight(&u).full_map(&u);
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..500 {
            let a = random_monomial(&mut rng, &u, 2);
            let b = random_monomial(&mut rng, &u, 2);
            let ab = a.checked_mul(&b).unwrap();
            assert_eq!(w.degree(&ab), w.degree(&a) + w.degree(&b));
        }
    }

    #[test]
    fn h_order_examples() {
        let u = VarUniverse::full_slack_h(1);
        let o = make_h_order(&u, TieDirection::IndexAscending);
        // d^3 > h * r * dr (same degree; d-block wins)
        let d3 = Monomial::var_pow(u.slack_d(), 3);
        let hrdr = Monomial::from_pairs([(u.h(), 1), (u.r(), 1), (u.dr(), 1)]).unwrap();
        assert_eq!(o.compare(&d3, &hrdr), Ordering::Greater);
        // h > 1: h is a variable, degree decides
        assert_eq!(o.compare(&Monomial::var(u.h()), &Monomial::one()), Ordering::Greater);
        // b1*c1*dy2 beats x12*dy1^2: same total degree 3, weight degree 0 vs -1
        let bterm = Monomial::from_pairs([(u.slack_b(1), 1), (u.slack_c(1), 1), (u.dy(2), 1)]).unwrap();
        let xterm = Monomial::from_pairs([(u.x(1, 2), 1), (u.dy(1), 2)]).unwrap();
        assert_eq!(o.compare(&bterm, &xterm), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative_and_total() {
        let mut rng = StdRng::seed_from_u64(17);
        let u = VarUniverse::full_slack_h(2);
        let orders = [
            make_prop2_order(&u),
            make_h_order(&u, TieDirection::IndexAscending),
            make_h_order(&u, TieDirection::IndexDescending),
        ];
        for o in &orders {
            for _ in 0..1000 {
                let a = random_monomial(&mut rng, &u, 2);
                let b = random_monomial(&mut rng, &u, 2);
                let m = random_monomial(&mut rng, &u, 2);
                let ord = o.compare(&a, &b);
                let ord_scaled = o.compare(&a.checked_mul(&m).unwrap(), &b.checked_mul(&m).unwrap());
                assert_eq!(ord, ord_scaled, "multiplicativity violated");
                // antisymmetry
                assert_eq!(o.compare(&b, &a), ord.reverse());
                if a == b {
                    assert_eq!(ord, Ordering::Equal);
                }
            }
            // transitivity on sampled triples
            for _ in 0..500 {
                let mut ms = [
                    random_monomial(&mut rng, &u, 2),
                    random_monomial(&mut rng, &u, 2),
                    random_monomial(&mut rng, &u, 2),
                ];
                ms.sort_by(|a, b| o.compare(a, b));
                assert_ne!(o.compare(&ms[0], &ms[1]), Ordering::Greater);
                assert_ne!(o.compare(&ms[1], &ms[2]), Ordering::Greater);
                assert_ne!(o.compare(&ms[0], &ms[2]), Ordering::Greater);
            }
        }
    }

    #[test]
    fn h_order_distinguishes_all_distinct_monomials() {
        // The block chain covers every variable, so compare == Equal only for
        // identical monomials; combined with the total-degree first layer the
        // order is a well-order.
        let u = VarUniverse::full_slack_h(1);
        let o = make_h_order(&u, TieDirection::IndexAscending);
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..2000 {
            let a = random_monomial(&mut rng, &u, 2);
            let b = random_monomial(&mut rng, &u, 2);
            if o.compare(&a, &b) == Ordering::Equal {
                assert_eq!(a, b);
            }
        }
        // sorting twice is stable: a sorted list is a fixed point
        let mut ms: Vec<Monomial> = (0..200).map(|_| random_monomial(&mut rng, &u, 2)).collect();
        ms.sort_by(|a, b| o.compare(a, b));
        let once = ms.clone();
        ms.sort_by(|a, b| o.compare(a, b));
        assert_eq!(once, ms);
        // 1 is the minimum of every sampled set once included
        ms.push(Monomial::one());
        let min = ms
            .iter()
            .cloned()
            .reduce(|m, x| if o.compare(&x, &m) == Ordering::Less { x } else { m })
            .unwrap();
        assert!(min.is_one());
    }
}
