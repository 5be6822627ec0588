use std::collections::BTreeSet;
use std::fmt;

/// A BL formula over named predicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    True,
    False,
    /// A scalar predicate, or a member of an indexed family when `index` is
    /// the name of a quantified variable.
    Pred {
        name: String,
        index: Option<String>,
    },
    StrongNeg(Box<Expr>),
    WeakNeg(Box<Expr>),
    StrongConj(Box<Expr>, Box<Expr>),
    WeakConj(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
    Iff(Box<Expr>, Box<Expr>),
    ForAll {
        var: String,
        domain: String,
        body: Box<Expr>,
    },
    Exists {
        var: String,
        domain: String,
        body: Box<Expr>,
    },
}

impl Expr {
    pub fn pred(name: impl Into<String>) -> Expr {
        Expr::Pred {
            name: name.into(),
            index: None,
        }
    }

    pub fn indexed(name: impl Into<String>, var: impl Into<String>) -> Expr {
        Expr::Pred {
            name: name.into(),
            index: Some(var.into()),
        }
    }

    pub fn strong_neg(self) -> Expr {
        Expr::StrongNeg(Box::new(self))
    }

    pub fn weak_neg(self) -> Expr {
        Expr::WeakNeg(Box::new(self))
    }

    pub fn and(self, rhs: Expr) -> Expr {
        Expr::StrongConj(Box::new(self), Box::new(rhs))
    }

    pub fn meet(self, rhs: Expr) -> Expr {
        Expr::WeakConj(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Expr) -> Expr {
        Expr::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: Expr) -> Expr {
        Expr::Iff(Box::new(self), Box::new(rhs))
    }

    pub fn forall(var: impl Into<String>, domain: impl Into<String>, body: Expr) -> Expr {
        Expr::ForAll {
            var: var.into(),
            domain: domain.into(),
            body: Box::new(body),
        }
    }

    pub fn exists(var: impl Into<String>, domain: impl Into<String>, body: Expr) -> Expr {
        Expr::Exists {
            var: var.into(),
            domain: domain.into(),
            body: Box::new(body),
        }
    }

    /// Left fold of strong conjunction; `None` for an empty iterator.
    pub fn and_all(items: impl IntoIterator<Item = Expr>) -> Option<Expr> {
        items.into_iter().reduce(Expr::and)
    }

    /// Names of predicates and predicate families the formula reads.
    pub fn free_predicates(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |e| {
            if let Expr::Pred { name, .. } = e {
                out.insert(name.clone());
            }
        });
        out
    }

    /// Names of the quantifier domains the formula ranges over.
    pub fn domains(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |e| match e {
            Expr::ForAll { domain, .. } | Expr::Exists { domain, .. } => {
                out.insert(domain.clone());
            }
            _ => {}
        });
        out
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::True | Expr::False | Expr::Pred { .. } => {}
            Expr::StrongNeg(c) | Expr::WeakNeg(c) => c.visit(f),
            Expr::StrongConj(l, r)
            | Expr::WeakConj(l, r)
            | Expr::Implies(l, r)
            | Expr::Iff(l, r) => {
                l.visit(f);
                r.visit(f);
            }
            Expr::ForAll { body, .. } | Expr::Exists { body, .. } => body.visit(f),
        }
    }
}

// Binding strength used by the printer: quantifiers and implications bind
// loosest, negations tightest.
const PREC_IMPL: u8 = 1;
const PREC_CONJ: u8 = 2;
const PREC_UNARY: u8 = 3;

/// Where a sub-expression is printed. A quantifier extends to the end of the
/// formula, so it only goes unparenthesised at the far right.
#[derive(Clone, Copy)]
struct Slot {
    min_prec: u8,
    rightmost: bool,
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::ForAll { .. } | Expr::Exists { .. } => 0,
            Expr::Implies(..) | Expr::Iff(..) => PREC_IMPL,
            Expr::StrongConj(..) | Expr::WeakConj(..) => PREC_CONJ,
            _ => PREC_UNARY,
        }
    }

    fn write_in(&self, f: &mut fmt::Formatter<'_>, slot: Slot) -> fmt::Result {
        let is_quant = matches!(self, Expr::ForAll { .. } | Expr::Exists { .. });
        let needs_parens = if is_quant {
            !slot.rightmost
        } else {
            self.prec() < slot.min_prec
        };
        if needs_parens {
            f.write_str("(")?;
            self.write_bare(f, Slot { min_prec: 0, rightmost: true })?;
            f.write_str(")")
        } else {
            self.write_bare(f, slot)
        }
    }

    fn write_bare(&self, f: &mut fmt::Formatter<'_>, slot: Slot) -> fmt::Result {
        match self {
            Expr::True => f.write_str("true"),
            Expr::False => f.write_str("false"),
            Expr::Pred { name, index: None } => f.write_str(name),
            Expr::Pred {
                name,
                index: Some(i),
            } => write!(f, "{name}[{i}]"),
            Expr::StrongNeg(c) | Expr::WeakNeg(c) => {
                f.write_str(if matches!(self, Expr::StrongNeg(_)) { "!" } else { "~" })?;
                c.write_in(
                    f,
                    Slot {
                        min_prec: PREC_UNARY,
                        rightmost: slot.rightmost,
                    },
                )
            }
            Expr::StrongConj(l, r) | Expr::WeakConj(l, r) => {
                let op = if matches!(self, Expr::StrongConj(..)) { " & " } else { " ^ " };
                // Left-associative: the right operand must bind tighter.
                l.write_in(
                    f,
                    Slot {
                        min_prec: PREC_CONJ,
                        rightmost: false,
                    },
                )?;
                f.write_str(op)?;
                r.write_in(
                    f,
                    Slot {
                        min_prec: PREC_UNARY,
                        rightmost: slot.rightmost,
                    },
                )
            }
            Expr::Implies(l, r) | Expr::Iff(l, r) => {
                let op = if matches!(self, Expr::Implies(..)) { " -> " } else { " <-> " };
                // Right-associative: the left operand must bind tighter.
                l.write_in(
                    f,
                    Slot {
                        min_prec: PREC_CONJ,
                        rightmost: false,
                    },
                )?;
                f.write_str(op)?;
                r.write_in(
                    f,
                    Slot {
                        min_prec: PREC_IMPL,
                        rightmost: slot.rightmost,
                    },
                )
            }
            Expr::ForAll { var, domain, body } | Expr::Exists { var, domain, body } => {
                let kw = if matches!(self, Expr::ForAll { .. }) { "forall" } else { "exists" };
                write!(f, "{kw} {var} in {domain}: ")?;
                body.write_in(
                    f,
                    Slot {
                        min_prec: 0,
                        rightmost: true,
                    },
                )
            }
        }
    }
}

/// Prints the concrete syntax accepted by [`crate::expr::parse`].
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in(
            f,
            Slot {
                min_prec: 0,
                rightmost: true,
            },
        )
    }
}
