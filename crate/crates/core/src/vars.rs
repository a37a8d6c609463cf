//! Variable universes for the Fisher-Bingham Weyl algebras.
//!
//! A [`VarUniverse`] declares every symbol an operator may mention for a given
//! sphere dimension `n`: the coordinates `x_{ij}` (`1 <= i <= j <= n+1`),
//! `y_k`, `r`, their paired differentials `dx_{ij}`, `dy_k`, `dr`, optionally
//! the slack constants `a_{pq}`, `b_i`, `c_i`, `d`, and optionally the
//! homogenization variable `h`.  Each variable gets a stable dense index
//! ([`VarId`]) so monomials can be stored as sparse exponent lists.

use std::collections::HashMap;
use std::fmt;

/// Index of a variable inside its [`VarUniverse`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub u32);

impl VarId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// What a variable is. Indices are 1-based, matching the usual notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum VarKind {
    /// Coordinate `x_{ij}` with `i <= j`.
    X { i: usize, j: usize },
    /// Coordinate `y_k`.
    Y { k: usize },
    /// Radius `r`.
    R,
    /// Differential `d/dx_{ij}`.
    Dx { i: usize, j: usize },
    /// Differential `d/dy_k`.
    Dy { k: usize },
    /// Differential `d/dr`.
    Dr,
    /// Slack constant `a_{pq}` with `p <= q`.
    SlackA { p: usize, q: usize },
    /// Slack constant `b_i`.
    SlackB { i: usize },
    /// Slack constant `c_i`.
    SlackC { i: usize },
    /// Slack constant `d`.
    SlackD,
    /// Homogenization variable.
    H,
}

impl VarKind {
    pub fn is_differential(self) -> bool {
        matches!(self, VarKind::Dx { .. } | VarKind::Dy { .. } | VarKind::Dr)
    }

    /// `x`, `y` or `r`: a coordinate paired with a differential.
    pub fn is_coordinate(self) -> bool {
        matches!(self, VarKind::X { .. } | VarKind::Y { .. } | VarKind::R)
    }

    pub fn is_slack(self) -> bool {
        matches!(
            self,
            VarKind::SlackA { .. } | VarKind::SlackB { .. } | VarKind::SlackC { .. } | VarKind::SlackD
        )
    }

    pub fn is_h(self) -> bool {
        matches!(self, VarKind::H)
    }

    fn name(self) -> String {
        fn two(prefix: &str, i: usize, j: usize) -> String {
            if i <= 9 && j <= 9 {
                format!("{prefix}{i}{j}")
            } else {
                format!("{prefix}{i}_{j}")
            }
        }
        match self {
            VarKind::X { i, j } => two("x", i, j),
            VarKind::Y { k } => format!("y{k}"),
            VarKind::R => "r".into(),
            VarKind::Dx { i, j } => two("dx", i, j),
            VarKind::Dy { k } => format!("dy{k}"),
            VarKind::Dr => "dr".into(),
            VarKind::SlackA { p, q } => two("a", p, q),
            VarKind::SlackB { i } => format!("b{i}"),
            VarKind::SlackC { i } => format!("c{i}"),
            VarKind::SlackD => "d".into(),
            VarKind::H => "h".into(),
        }
    }
}

struct VarInfo {
    kind: VarKind,
    name: String,
    pair: Option<VarId>,
}

/// The declared variable set of one algebra instance.
pub struct VarUniverse {
    n: usize,
    diagonal_only: bool,
    has_slack: bool,
    has_h: bool,
    vars: Vec<VarInfo>,
    by_name: HashMap<String, VarId>,
    by_kind: HashMap<VarKind, VarId>,
}

impl VarUniverse {
    /// Full universe for dimension `n`: all `x_{ij}`, `y_k`, `r` and their
    /// differentials. `slack` adds `a_{pq}`, `b_i`, `c_i`, `d`; `homogenized`
    /// adds `h` (and implies `slack` universes in this crate's usage, though
    /// the two flags are independent here).
    pub fn new(n: usize, diagonal_only: bool, slack: bool, homogenized: bool) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        let m = n + 1;
        let mut kinds: Vec<VarKind> = Vec::new();
        // Coordinates first, then differentials, then slack, then h. The
        // layout fixes the global canonicalization order (graded lex over
        // this index sequence).
        for i in 1..=m {
            for j in i..=m {
                if diagonal_only && i != j {
                    continue;
                }
                kinds.push(VarKind::X { i, j });
            }
        }
        for k in 1..=m {
            kinds.push(VarKind::Y { k });
        }
        kinds.push(VarKind::R);
        for i in 1..=m {
            for j in i..=m {
                if diagonal_only && i != j {
                    continue;
                }
                kinds.push(VarKind::Dx { i, j });
            }
        }
        for k in 1..=m {
            kinds.push(VarKind::Dy { k });
        }
        kinds.push(VarKind::Dr);
        if slack {
            for p in 1..=m {
                for q in p..=m {
                    if diagonal_only && p != q {
                        continue;
                    }
                    kinds.push(VarKind::SlackA { p, q });
                }
            }
            for i in 1..=m {
                kinds.push(VarKind::SlackB { i });
            }
            for i in 1..=m {
                kinds.push(VarKind::SlackC { i });
            }
            kinds.push(VarKind::SlackD);
        }
        if homogenized {
            kinds.push(VarKind::H);
        }

        let mut vars = Vec::with_capacity(kinds.len());
        let mut by_name = HashMap::new();
        let mut by_kind = HashMap::new();
        for (idx, kind) in kinds.iter().copied().enumerate() {
            let id = VarId(idx as u32);
            let name = kind.name();
            by_name.insert(name.clone(), id);
            by_kind.insert(kind, id);
            vars.push(VarInfo { kind, name, pair: None });
        }
        let mut u = VarUniverse {
            n,
            diagonal_only,
            has_slack: slack,
            has_h: homogenized,
            vars,
            by_name,
            by_kind,
        };
        // Wire coordinate <-> differential pairs.
        for idx in 0..u.vars.len() {
            let id = VarId(idx as u32);
            let partner = match u.vars[idx].kind {
                VarKind::X { i, j } => Some(VarKind::Dx { i, j }),
                VarKind::Y { k } => Some(VarKind::Dy { k }),
                VarKind::R => Some(VarKind::Dr),
                VarKind::Dx { i, j } => Some(VarKind::X { i, j }),
                VarKind::Dy { k } => Some(VarKind::Y { k }),
                VarKind::Dr => Some(VarKind::R),
                _ => None,
            };
            u.vars[idx].pair = partner.map(|k| u.by_kind[&k]);
            let _ = id;
        }
        u
    }

    pub fn full(n: usize) -> Self {
        Self::new(n, false, false, false)
    }

    pub fn diagonal(n: usize) -> Self {
        Self::new(n, true, false, false)
    }

    pub fn full_slack(n: usize) -> Self {
        Self::new(n, false, true, false)
    }

    pub fn full_slack_h(n: usize) -> Self {
        Self::new(n, false, true, true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of declared variables.
    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_diagonal_only(&self) -> bool {
        self.diagonal_only
    }

    pub fn has_slack(&self) -> bool {
        self.has_slack
    }

    pub fn has_h(&self) -> bool {
        self.has_h
    }

    pub fn kind(&self, v: VarId) -> VarKind {
        self.vars[v.index()].kind
    }

    pub fn name(&self, v: VarId) -> &str {
        &self.vars[v.index()].name
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).copied()
    }

    fn get(&self, kind: VarKind) -> VarId {
        *self
            .by_kind
            .get(&kind)
            .unwrap_or_else(|| panic!("variable {:?} not in this universe", kind))
    }

    /// `x_{ij}` (symmetric access: indices are sorted).
    pub fn x(&self, i: usize, j: usize) -> VarId {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.get(VarKind::X { i, j })
    }

    pub fn y(&self, k: usize) -> VarId {
        self.get(VarKind::Y { k })
    }

    pub fn r(&self) -> VarId {
        self.get(VarKind::R)
    }

    pub fn dx(&self, i: usize, j: usize) -> VarId {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.get(VarKind::Dx { i, j })
    }

    pub fn dy(&self, k: usize) -> VarId {
        self.get(VarKind::Dy { k })
    }

    pub fn dr(&self) -> VarId {
        self.get(VarKind::Dr)
    }

    pub fn slack_a(&self, p: usize, q: usize) -> VarId {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        self.get(VarKind::SlackA { p, q })
    }

    pub fn slack_b(&self, i: usize) -> VarId {
        self.get(VarKind::SlackB { i })
    }

    pub fn slack_c(&self, i: usize) -> VarId {
        self.get(VarKind::SlackC { i })
    }

    pub fn slack_d(&self) -> VarId {
        self.get(VarKind::SlackD)
    }

    pub fn h(&self) -> VarId {
        self.get(VarKind::H)
    }

    /// The conjugate partner: `x_{ij} <-> dx_{ij}`, `y_k <-> dy_k`, `r <-> dr`.
    pub fn pair(&self, v: VarId) -> Option<VarId> {
        self.vars[v.index()].pair
    }

    pub fn is_differential(&self, v: VarId) -> bool {
        self.kind(v).is_differential()
    }

    pub fn is_coordinate(&self, v: VarId) -> bool {
        self.kind(v).is_coordinate()
    }

    pub fn is_slack(&self, v: VarId) -> bool {
        self.kind(v).is_slack()
    }

    pub fn is_h(&self, v: VarId) -> bool {
        self.kind(v).is_h()
    }

    /// All variable ids in index order.
    pub fn all_vars(&self) -> impl Iterator<Item = VarId> + '_ {
        (0..self.vars.len() as u32).map(VarId)
    }

    pub fn differential_vars(&self) -> Vec<VarId> {
        self.all_vars().filter(|&v| self.is_differential(v)).collect()
    }

    pub fn coordinate_vars(&self) -> Vec<VarId> {
        self.all_vars().filter(|&v| self.is_coordinate(v)).collect()
    }

    pub fn slack_vars(&self) -> Vec<VarId> {
        self.all_vars().filter(|&v| self.is_slack(v)).collect()
    }

    /// Row-major list of the `dx_{ij}` present (diagonal universes list only
    /// `dx_{ii}`).
    pub fn dx_vars(&self) -> Vec<VarId> {
        self.all_vars()
            .filter(|&v| matches!(self.kind(v), VarKind::Dx { .. }))
            .collect()
    }

    pub fn dy_vars(&self) -> Vec<VarId> {
        self.all_vars()
            .filter(|&v| matches!(self.kind(v), VarKind::Dy { .. }))
            .collect()
    }

    /// Structural compatibility: same dimension and flags.
    pub fn same_shape(&self, other: &VarUniverse) -> bool {
        self.n == other.n
            && self.diagonal_only == other.diagonal_only
            && self.has_slack == other.has_slack
            && self.has_h == other.has_h
    }
}

impl fmt::Debug for VarUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "VarUniverse(n={}, diagonal={}, slack={}, h={}, {} vars)",
            self.n,
            self.diagonal_only,
            self.has_slack,
            self.has_h,
            self.vars.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_is_involutive_and_total_on_coordinates() {
        let u = VarUniverse::full_slack_h(2);
        for v in u.all_vars() {
            match u.pair(v) {
                Some(w) => {
                    assert_eq!(u.pair(w), Some(v));
                    assert!(u.is_coordinate(v) != u.is_coordinate(w));
                }
                None => assert!(u.is_slack(v) || u.is_h(v)),
            }
        }
    }

    #[test]
    fn names_round_trip() {
        let u = VarUniverse::full_slack_h(3);
        for v in u.all_vars() {
            assert_eq!(u.lookup(u.name(v)), Some(v));
        }
        assert_eq!(u.lookup("x12"), Some(u.x(1, 2)));
        assert_eq!(u.lookup("dx12"), Some(u.dx(2, 1)));
        assert_eq!(u.lookup("dy3"), Some(u.dy(3)));
        assert_eq!(u.lookup("d"), Some(u.slack_d()));
        assert_eq!(u.lookup("dr"), Some(u.dr()));
    }

    #[test]
    fn diagonal_universe_drops_off_diagonal() {
        let u = VarUniverse::diagonal(2);
        assert!(u.lookup("x12").is_none());
        assert!(u.lookup("x11").is_some());
        // n=2: 3 x_ii + 3 y + r, paired differentials, no slack, no h.
        assert_eq!(u.len(), 2 * (3 + 3 + 1));
    }

    #[test]
    fn variable_classes_are_disjoint() {
        let u = VarUniverse::full_slack_h(2);
        for v in u.all_vars() {
            let flags = [
                u.is_coordinate(v),
                u.is_differential(v),
                u.is_slack(v),
                u.is_h(v),
            ];
            assert_eq!(flags.iter().filter(|&&b| b).count(), 1);
        }
    }
}
