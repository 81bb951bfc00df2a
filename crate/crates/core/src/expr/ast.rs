use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zmod(usize),
    Gf(usize, usize),
    Product(Box<RingExpr>, Box<RingExpr>),
    Matrix(usize, Box<RingExpr>),
    UpperTri(usize, Box<RingExpr>),
    TrivialExt(Box<RingExpr>),
    Bt(Box<RingExpr>),
    /// `R[x]/(x^p)`
    Nil(Box<RingExpr>, usize),
    PolyQ(Box<RingExpr>, Vec<usize>),
    GroupRing(Box<RingExpr>, GroupExpr),
    ModJ(Box<RingExpr>),
    Corner(Box<RingExpr>, usize),
    Quot(Box<RingExpr>, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    S3,
    D4,
    Q8,
}

impl RingExpr {
    pub fn product(a: RingExpr, b: RingExpr) -> RingExpr {
        RingExpr::Product(Box::new(a), Box::new(b))
    }
}

impl GroupExpr {
    pub fn product(a: GroupExpr, b: GroupExpr) -> GroupExpr {
        GroupExpr::Product(Box::new(a), Box::new(b))
    }
}

fn list(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z/{n}"),
            RingExpr::Gf(p, k) => write!(f, "GF({p}, {k})"),
            RingExpr::Product(a, b) => match **a {
                RingExpr::Product(..) => write!(f, "({a}) x {b}"),
                _ => write!(f, "{a} x {b}"),
            },
            RingExpr::Matrix(m, e) => write!(f, "M({m}, {e})"),
            RingExpr::UpperTri(m, e) => write!(f, "UT({m}, {e})"),
            RingExpr::TrivialExt(e) => write!(f, "TE({e})"),
            RingExpr::Bt(e) => write!(f, "BT({e})"),
            RingExpr::Nil(e, p) => write!(f, "NIL({e}, {p})"),
            RingExpr::PolyQ(e, c) => write!(f, "POLYQ({e}, {})", list(c)),
            RingExpr::GroupRing(e, g) => write!(f, "GR({e}, {g})"),
            RingExpr::ModJ(e) => write!(f, "MODJ({e})"),
            RingExpr::Corner(e, i) => write!(f, "CORNER({e}, {i})"),
            RingExpr::Quot(e, g) => write!(f, "QUOT({e}, {})", list(g)),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Product(a, b) => match **a {
                GroupExpr::Product(..) => write!(f, "({a}) x {b}"),
                _ => write!(f, "{a} x {b}"),
            },
            GroupExpr::S3 => f.write_str("S3"),
            GroupExpr::D4 => f.write_str("D4"),
            GroupExpr::Q8 => f.write_str("Q8"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        assert_eq!(RingExpr::Zmod(4).to_string(), "Z/4");
        let gr = RingExpr::GroupRing(Box::new(RingExpr::Zmod(2)), GroupExpr::Cyclic(3));
        assert_eq!(gr.to_string(), "GR(Z/2, C3)");
        let (a, b, c) = (RingExpr::Zmod(2), RingExpr::Zmod(3), RingExpr::Zmod(5));
        let right = RingExpr::product(a.clone(), RingExpr::product(b.clone(), c.clone()));
        assert_eq!(right.to_string(), "Z/2 x Z/3 x Z/5");
        let left = RingExpr::product(RingExpr::product(a, b), c);
        assert_eq!(left.to_string(), "(Z/2 x Z/3) x Z/5");
        let q = RingExpr::Quot(Box::new(RingExpr::Zmod(12)), vec![4, 6]);
        assert_eq!(q.to_string(), "QUOT(Z/12, [4, 6])");
    }
}
