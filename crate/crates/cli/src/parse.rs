//! Recursive-descent parser and elaborator for the expression language.
//!
//! One grammar covers field elements, additive maps, forms, classical
//! polynomials, and one-variable functions; elaboration infers which kind
//! an expression denotes and the `demand_*` helpers coerce or reject at
//! the use site. Precedence, loosest to tightest: `+ -`, `* /`, unary
//! `-`, `^` (so `-a/b` is `(-a)/b` and `-a^2` is `-(a^2)`).

use fecheck_core::atoms::AdditiveMap;
use fecheck_core::exactfield::FieldElem;
use fecheck_core::genpoly::ClassicalPoly;
use fecheck_core::multiadd::{SymForm, UnaryFn};
use fecheck_core::Error;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::lex::{tokenize, ParseError, Token, TokenKind};

/// Surface syntax tree with byte offsets for error reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `name(g1; g2; ...)` where each group is comma-separated.
    Call {
        name: String,
        groups: Vec<Vec<Expr>>,
    },
    /// `poly[c0, c1, ...]`.
    PolyLit(Vec<Expr>),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(src)?,
            pos: 0,
            end: src.len(),
        })
    }

    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.offset)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, kind: &TokenKind) -> Result<(), ParseError> {
        match self.peek() {
            Some(k) if k == kind => {
                self.pos += 1;
                Ok(())
            }
            Some(k) => Err(ParseError::new(
                format!("expected {}, found {}", kind.describe(), k.describe()),
                self.offset(),
            )),
            None => Err(ParseError::new(
                format!("expected {}, found end of input", kind.describe()),
                self.end,
            )),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(TokenKind::Plus) => {
                    let offset = self.offset();
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr {
                        kind: ExprKind::Add(Box::new(lhs), Box::new(rhs)),
                        offset,
                    };
                }
                Some(TokenKind::Minus) => {
                    let offset = self.offset();
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr {
                        kind: ExprKind::Sub(Box::new(lhs), Box::new(rhs)),
                        offset,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(TokenKind::Star) => {
                    let offset = self.offset();
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = Expr {
                        kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)),
                        offset,
                    };
                }
                Some(TokenKind::Slash) => {
                    let offset = self.offset();
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = Expr {
                        kind: ExprKind::Div(Box::new(lhs), Box::new(rhs)),
                        offset,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if let Some(TokenKind::Minus) = self.peek() {
            let offset = self.offset();
            self.pos += 1;
            let inner = self.factor()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                offset,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.primary()?;
        while let Some(TokenKind::Caret) = self.peek() {
            let offset = self.offset();
            self.pos += 1;
            let negative = if let Some(TokenKind::Minus) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let exp_offset = self.offset();
            let Some(Token {
                kind: TokenKind::Int(n),
                ..
            }) = self.bump()
            else {
                return Err(ParseError::new(
                    "expected an integer exponent after `^`",
                    exp_offset,
                ));
            };
            let mut exp = n.to_i64().ok_or_else(|| {
                ParseError::new("exponent is out of range", exp_offset)
            })?;
            if exp > 4096 {
                return Err(ParseError::new("exponent is out of range", exp_offset));
            }
            if negative {
                exp = -exp;
            }
            base = Expr {
                kind: ExprKind::Pow(Box::new(base), exp),
                offset,
            };
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.bump().map(|t| t.kind) {
            Some(TokenKind::Int(n)) => Ok(Expr {
                kind: ExprKind::Int(n),
                offset,
            }),
            Some(TokenKind::Ident(name)) => {
                if name == "poly" {
                    self.expect(&TokenKind::LBracket)?;
                    let items = self.comma_list(&TokenKind::RBracket)?;
                    self.expect(&TokenKind::RBracket)?;
                    return Ok(Expr {
                        kind: ExprKind::PolyLit(items),
                        offset,
                    });
                }
                if let Some(TokenKind::LParen) = self.peek() {
                    self.pos += 1;
                    let mut groups = vec![self.comma_list(&TokenKind::RParen)?];
                    while let Some(TokenKind::Semi) = self.peek() {
                        self.pos += 1;
                        groups.push(self.comma_list(&TokenKind::RParen)?);
                    }
                    self.expect(&TokenKind::RParen)?;
                    return Ok(Expr {
                        kind: ExprKind::Call { name, groups },
                        offset,
                    });
                }
                Ok(Expr {
                    kind: ExprKind::Ident(name),
                    offset,
                })
            }
            Some(TokenKind::LParen) => {
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen)?;
                Ok(inner)
            }
            Some(other) => Err(ParseError::new(
                format!("expected an expression, found {}", other.describe()),
                offset,
            )),
            None => Err(ParseError::new(
                "expected an expression, found end of input",
                self.end,
            )),
        }
    }

    /// Comma-separated expressions, possibly empty, stopping before
    /// `terminator` or `;`.
    fn comma_list(&mut self, terminator: &TokenKind) -> Result<Vec<Expr>, ParseError> {
        let mut items = Vec::new();
        if self.peek() == Some(terminator) || self.peek() == Some(&TokenKind::Semi) {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if let Some(TokenKind::Comma) = self.peek() {
                self.pos += 1;
                continue;
            }
            return Ok(items);
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if let Some(tok) = self.tokens.get(self.pos) {
            return Err(ParseError::new(
                format!("unexpected {}", tok.kind.describe()),
                tok.offset,
            ));
        }
        Ok(())
    }
}

/// Parses source into a surface tree without elaborating.
pub fn parse_surface(src: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser::new(src)?;
    let expr = parser.expr()?;
    parser.finish()?;
    Ok(expr)
}

/// A typed expression value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Field(FieldElem),
    Atom(AdditiveMap),
    Form(SymForm),
    Poly(ClassicalPoly),
    Unary(UnaryFn),
}

impl Value {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Value::Field(_) => "field element",
            Value::Atom(_) => "additive map",
            Value::Form(_) => "form",
            Value::Poly(_) => "polynomial",
            Value::Unary(_) => "function",
        }
    }
}

fn core_err(e: Error, offset: usize) -> ParseError {
    ParseError::new(format!("{e}"), offset)
}

fn atom_terms(m: AdditiveMap) -> Vec<(FieldElem, AdditiveMap)> {
    match m {
        AdditiveMap::LinComb(terms) => terms,
        other => vec![(FieldElem::one(), other)],
    }
}

fn scale_atom(c: &FieldElem, m: AdditiveMap) -> AdditiveMap {
    AdditiveMap::LinComb(
        atom_terms(m)
            .into_iter()
            .map(|(ci, mi)| (c * &ci, mi))
            .collect(),
    )
}

fn form_terms(f: SymForm) -> Vec<(FieldElem, SymForm)> {
    match f {
        SymForm::Sum { terms, .. } => terms,
        other => vec![(FieldElem::one(), other)],
    }
}

fn scale_form(c: &FieldElem, f: SymForm, offset: usize) -> Result<SymForm, ParseError> {
    let arity = f.arity();
    let terms = form_terms(f)
        .into_iter()
        .map(|(ci, fi)| (c * &ci, fi))
        .collect();
    SymForm::sum(arity, terms).map_err(|e| core_err(e, offset))
}

fn add_forms(a: SymForm, b: SymForm, negate: bool, offset: usize) -> Result<SymForm, ParseError> {
    let arity = a.arity();
    let mut terms = form_terms(a);
    for (c, f) in form_terms(b) {
        let c = if negate { &FieldElem::from_int(-1) * &c } else { c };
        terms.push((c, f));
    }
    SymForm::sum(arity, terms).map_err(|e| core_err(e, offset))
}

/// Elaborates a surface tree into a typed value.
pub fn elaborate(expr: &Expr) -> Result<Value, ParseError> {
    let offset = expr.offset;
    match &expr.kind {
        ExprKind::Int(n) => Ok(Value::Field(FieldElem::from_rat(
            num_rational::BigRational::from_integer(n.clone()),
        ))),
        ExprKind::Ident(name) => match name.as_str() {
            "t" => Ok(Value::Field(FieldElem::var())),
            "x" => Ok(Value::Unary(UnaryFn::arg())),
            "id" => Ok(Value::Atom(AdditiveMap::Identity)),
            other => Err(ParseError::new(
                format!("unknown identifier `{other}`"),
                offset,
            )),
        },
        ExprKind::Neg(inner) => match elaborate(inner)? {
            Value::Field(f) => Ok(Value::Field(-&f)),
            Value::Atom(m) => Ok(Value::Atom(scale_atom(&FieldElem::from_int(-1), m))),
            Value::Form(f) => Ok(Value::Form(scale_form(
                &FieldElem::from_int(-1),
                f,
                offset,
            )?)),
            Value::Poly(p) => Ok(Value::Poly(ClassicalPoly::new(
                p.coeffs().iter().map(|c| -c).collect(),
            ))),
            Value::Unary(u) => Ok(Value::Unary(UnaryFn::scaled(
                FieldElem::from_int(-1),
                u,
            ))),
        },
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
            let negate = matches!(expr.kind, ExprKind::Sub(_, _));
            let va = elaborate(a)?;
            let vb = elaborate(b)?;
            match (va, vb) {
                (Value::Field(a), Value::Field(b)) => {
                    Ok(Value::Field(if negate { &a - &b } else { &a + &b }))
                }
                (Value::Atom(a), Value::Atom(b)) => {
                    let mut terms = atom_terms(a);
                    for (c, m) in atom_terms(b) {
                        let c = if negate {
                            &FieldElem::from_int(-1) * &c
                        } else {
                            c
                        };
                        terms.push((c, m));
                    }
                    Ok(Value::Atom(AdditiveMap::LinComb(terms)))
                }
                (Value::Form(a), Value::Form(b)) => {
                    Ok(Value::Form(add_forms(a, b, negate, offset)?))
                }
                (va, vb) => {
                    let a = demand_unary_at(va, offset)?;
                    let b = demand_unary_at(vb, offset)?;
                    Ok(Value::Unary(if negate {
                        UnaryFn::minus(a, b)
                    } else {
                        UnaryFn::sum(vec![a, b])
                    }))
                }
            }
        }
        ExprKind::Mul(a, b) => {
            let va = elaborate(a)?;
            let vb = elaborate(b)?;
            match (va, vb) {
                (Value::Field(a), Value::Field(b)) => Ok(Value::Field(&a * &b)),
                (Value::Field(c), Value::Atom(m)) | (Value::Atom(m), Value::Field(c)) => {
                    Ok(Value::Atom(scale_atom(&c, m)))
                }
                (Value::Field(c), Value::Form(f)) | (Value::Form(f), Value::Field(c)) => {
                    Ok(Value::Form(scale_form(&c, f, offset)?))
                }
                (Value::Field(c), vb) => {
                    let u = demand_unary_at(vb, offset)?;
                    Ok(Value::Unary(UnaryFn::scaled(c, u)))
                }
                (va, Value::Field(c)) => {
                    let u = demand_unary_at(va, offset)?;
                    Ok(Value::Unary(UnaryFn::scaled(c, u)))
                }
                (va, vb) => {
                    let a = demand_unary_at(va, offset)?;
                    let b = demand_unary_at(vb, offset)?;
                    Ok(Value::Unary(UnaryFn::product(vec![a, b])))
                }
            }
        }
        ExprKind::Div(a, b) => {
            let va = elaborate(a)?;
            let vb = elaborate(b)?;
            match (va, vb) {
                (Value::Field(a), Value::Field(b)) => {
                    Ok(Value::Field(a.div(&b).map_err(|e| core_err(e, offset))?))
                }
                (va, vb) => {
                    let a = demand_unary_at(va, offset)?;
                    let b = demand_unary_at(vb, offset)?;
                    Ok(Value::Unary(UnaryFn::quotient(a, b)))
                }
            }
        }
        ExprKind::Pow(base, exp) => match elaborate(base)? {
            Value::Field(f) => Ok(Value::Field(
                f.pow(*exp).map_err(|e| core_err(e, offset))?,
            )),
            other => {
                let u = demand_unary_at(other, offset)?;
                let exp = u32::try_from(*exp).map_err(|_| {
                    ParseError::new(
                        "negative exponents need a field-element base; use a quotient",
                        offset,
                    )
                })?;
                Ok(Value::Unary(UnaryFn::power(u, exp)))
            }
        },
        ExprKind::PolyLit(items) => {
            let coeffs: Result<Vec<FieldElem>, ParseError> = items
                .iter()
                .map(|item| demand_field(elaborate(item)?, item.offset))
                .collect();
            Ok(Value::Poly(ClassicalPoly::new(coeffs?)))
        }
        ExprKind::Call { name, groups } => elaborate_call(name, groups, offset),
    }
}

fn single_group<'g>(
    name: &str,
    groups: &'g [Vec<Expr>],
    offset: usize,
) -> Result<&'g [Expr], ParseError> {
    if groups.len() != 1 {
        return Err(ParseError::new(
            format!("`{name}` does not take `;`-separated groups"),
            offset,
        ));
    }
    Ok(&groups[0])
}

fn fixed_args<'g>(
    name: &str,
    groups: &'g [Vec<Expr>],
    count: usize,
    offset: usize,
) -> Result<&'g [Expr], ParseError> {
    let args = single_group(name, groups, offset)?;
    if args.len() != count {
        return Err(ParseError::new(
            format!("`{name}` expects {count} argument(s), got {}", args.len()),
            offset,
        ));
    }
    Ok(args)
}

fn elaborate_call(name: &str, groups: &[Vec<Expr>], offset: usize) -> Result<Value, ParseError> {
    match name {
        "der" => {
            let args = fixed_args(name, groups, 1, offset)?;
            let u = demand_field(elaborate(&args[0])?, args[0].offset)?;
            Ok(Value::Atom(AdditiveMap::derivation(u)))
        }
        "sub" => {
            let args = fixed_args(name, groups, 1, offset)?;
            let r = demand_field(elaborate(&args[0])?, args[0].offset)?;
            Ok(Value::Atom(
                AdditiveMap::substitution(r).map_err(|e| core_err(e, args[0].offset))?,
            ))
        }
        "comp" => {
            let args = single_group(name, groups, offset)?;
            let parts: Result<Vec<AdditiveMap>, ParseError> = args
                .iter()
                .map(|a| demand_atom(elaborate(a)?, a.offset))
                .collect();
            Ok(Value::Atom(
                AdditiveMap::compose(parts?).map_err(|e| core_err(e, offset))?,
            ))
        }
        "lin" => {
            let args = single_group(name, groups, offset)?;
            if args.is_empty() {
                return Ok(Value::Atom(AdditiveMap::LinComb(Vec::new())));
            }
            if args.len() != 1 {
                return Err(ParseError::new(
                    "`lin` expects one `+`-combined argument",
                    offset,
                ));
            }
            let m = demand_atom(elaborate(&args[0])?, args[0].offset)?;
            Ok(Value::Atom(AdditiveMap::LinComb(atom_terms(m))))
        }
        "pull" => {
            let args = fixed_args(name, groups, 2, offset)?;
            let map = demand_atom(elaborate(&args[0])?, args[0].offset)?;
            let arity = demand_usize(&args[1])?;
            Ok(Value::Form(
                SymForm::pullback(map, arity).map_err(|e| core_err(e, offset))?,
            ))
        }
        "prod" => {
            let args = single_group(name, groups, offset)?;
            let maps: Result<Vec<AdditiveMap>, ParseError> = args
                .iter()
                .map(|a| demand_atom(elaborate(a)?, a.offset))
                .collect();
            Ok(Value::Form(
                SymForm::atom_product(maps?).map_err(|e| core_err(e, offset))?,
            ))
        }
        "blocks" => {
            if groups.len() != 2 {
                return Err(ParseError::new(
                    "`blocks` expects `blocks(form; a1, ..., an)`",
                    offset,
                ));
            }
            if groups[0].len() != 1 {
                return Err(ParseError::new(
                    "`blocks` expects exactly one base form before `;`",
                    offset,
                ));
            }
            let base = demand_form(elaborate(&groups[0][0])?, groups[0][0].offset)?;
            let alphas: Result<Vec<usize>, ParseError> =
                groups[1].iter().map(demand_usize).collect();
            Ok(Value::Form(
                SymForm::power_blocks(base, alphas?).map_err(|e| core_err(e, offset))?,
            ))
        }
        "sum" => {
            let args = fixed_args(name, groups, 1, offset)?;
            let f = demand_form(elaborate(&args[0])?, args[0].offset)?;
            let arity = f.arity();
            Ok(Value::Form(
                SymForm::sum(arity, form_terms(f)).map_err(|e| core_err(e, offset))?,
            ))
        }
        "trace" => {
            let args = fixed_args(name, groups, 1, offset)?;
            let f = demand_form(elaborate(&args[0])?, args[0].offset)?;
            Ok(Value::Unary(f.trace()))
        }
        "of" => {
            let args = fixed_args(name, groups, 2, offset)?;
            let outer = elaborate(&args[0])?;
            let inner = demand_unary_at(elaborate(&args[1])?, args[1].offset)?;
            match outer {
                Value::Poly(p) => Ok(Value::Unary(UnaryFn::PolyOf(p, Box::new(inner)))),
                other => {
                    let outer = demand_unary_at(other, args[0].offset)?;
                    Ok(Value::Unary(UnaryFn::compose_with(outer, inner)))
                }
            }
        }
        "rank" | "hod" => Err(ParseError::new(
            format!("`{name}(...)` is only valid as a whole command"),
            offset,
        )),
        other => Err(ParseError::new(
            format!("unknown function `{other}`"),
            offset,
        )),
    }
}

pub fn demand_field(value: Value, offset: usize) -> Result<FieldElem, ParseError> {
    match value {
        Value::Field(f) => Ok(f),
        other => Err(ParseError::new(
            format!("expected a field element, found a {}", other.kind_name()),
            offset,
        )),
    }
}

pub fn demand_atom(value: Value, offset: usize) -> Result<AdditiveMap, ParseError> {
    match value {
        Value::Atom(m) => Ok(m),
        other => Err(ParseError::new(
            format!("expected an additive map, found a {}", other.kind_name()),
            offset,
        )),
    }
}

pub fn demand_form(value: Value, offset: usize) -> Result<SymForm, ParseError> {
    match value {
        Value::Form(f) => Ok(f),
        other => Err(ParseError::new(
            format!("expected a form, found a {}", other.kind_name()),
            offset,
        )),
    }
}

fn demand_unary_at(value: Value, offset: usize) -> Result<UnaryFn, ParseError> {
    match value {
        Value::Unary(u) => Ok(u),
        Value::Field(f) => Ok(UnaryFn::Const(f)),
        Value::Atom(m) => Ok(UnaryFn::atom(m)),
        Value::Poly(p) => Ok(p.as_fn()),
        Value::Form(_) => Err(ParseError::new(
            "a form is not a one-variable function; wrap it in trace(...)",
            offset,
        )),
    }
}

fn demand_usize(expr: &Expr) -> Result<usize, ParseError> {
    let value = demand_field(elaborate(expr)?, expr.offset)?;
    let rat = value.as_rat().ok_or_else(|| {
        ParseError::new("expected a nonnegative integer", expr.offset)
    })?;
    if !rat.is_integer() || rat.is_negative() {
        return Err(ParseError::new(
            "expected a nonnegative integer",
            expr.offset,
        ));
    }
    rat.to_integer()
        .to_usize()
        .ok_or_else(|| ParseError::new("integer is out of range", expr.offset))
}

/// Parses and elaborates to whatever kind the expression denotes.
pub fn parse_expression(src: &str) -> Result<Value, ParseError> {
    elaborate(&parse_surface(src)?)
}

pub fn parse_field_elem(src: &str) -> Result<FieldElem, ParseError> {
    let expr = parse_surface(src)?;
    let offset = expr.offset;
    demand_field(elaborate(&expr)?, offset)
}

pub fn parse_additive_map(src: &str) -> Result<AdditiveMap, ParseError> {
    let expr = parse_surface(src)?;
    let offset = expr.offset;
    demand_atom(elaborate(&expr)?, offset)
}

pub fn parse_sym_form(src: &str) -> Result<SymForm, ParseError> {
    let expr = parse_surface(src)?;
    let offset = expr.offset;
    demand_form(elaborate(&expr)?, offset)
}

pub fn parse_classical_poly(src: &str) -> Result<ClassicalPoly, ParseError> {
    let expr = parse_surface(src)?;
    match elaborate(&expr)? {
        Value::Poly(p) => Ok(p),
        other => Err(ParseError::new(
            format!("expected a polynomial literal, found a {}", other.kind_name()),
            expr.offset,
        )),
    }
}

pub fn parse_unary_fn(src: &str) -> Result<UnaryFn, ParseError> {
    let expr = parse_surface(src)?;
    let offset = expr.offset;
    demand_unary_at(elaborate(&expr)?, offset)
}
