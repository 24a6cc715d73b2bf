//! Expression language: tokenizer, recursive-descent parser and evaluator.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/")? factor)*
//! factor := "-" factor | atom ("^" "-"? int)?
//! atom   := int | r | s | q | d | u | x | y | z | name | "(" expr ")"
//! ```
//!
//! Juxtaposition multiplies. A run of letters drawn from `druxyzsq` that is
//! not a bound name splits into single letters, so `xyd` is `x*y*d`.

use std::collections::HashMap;
use std::fmt;

use downup_core::{BasisWord, Case, DownUp, Element, Param, Scalar};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputError {
    Syntax { pos: usize, msg: String },
    NonIntegerExponent { pos: usize },
    NegativePowerOfDU { pos: usize },
    Eval { pos: usize, msg: String },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Syntax { pos, msg } => write!(f, "SyntaxError at {pos}: {msg}"),
            InputError::NonIntegerExponent { pos } => {
                write!(
                    f,
                    "NonIntegerExponent at {pos}: exponents must be integer literals"
                )
            }
            InputError::NegativePowerOfDU { pos } => write!(
                f,
                "NegativePowerOfDU at {pos}: d and u are not invertible in the localized algebra"
            ),
            InputError::Eval { pos, msg } => write!(f, "EvalError at {pos}: {msg}"),
        }
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Letter(char),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Other(char),
    End,
}

const LETTERS: &str = "druxyzsq";

fn tokenize(text: &str, names: &dyn Fn(&str) -> bool) -> Result<Vec<(usize, Tok)>, InputError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|p| p.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].1.is_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            let word: String = chars[start..k].iter().map(|p| p.1).collect();
            if names(&word) {
                out.push((pos, Tok::Name(word)));
            } else if word.chars().all(|ch| LETTERS.contains(ch)) {
                for (off, ch) in chars[start..k].iter() {
                    out.push((*off, Tok::Letter(*ch)));
                }
            } else {
                return Err(InputError::Syntax {
                    pos,
                    msg: format!("unknown name '{word}'"),
                });
            }
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => Tok::Other(other),
        };
        out.push((pos, t));
        k += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Param(Param, usize),
    /// One of `d u x y z`.
    Gen(char),
    Name(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Divisor must evaluate to a scalar.
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, usize),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self) -> InputError {
        let msg = match self.peek() {
            Tok::End => "unexpected end of input".to_string(),
            Tok::Other(c) => format!("unexpected character '{c}'"),
            t => format!("unexpected {}", describe(t)),
        };
        InputError::Syntax {
            pos: self.pos(),
            msg,
        }
    }

    fn expr(&mut self) -> Result<Expr, InputError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, InputError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    let (pos, _) = self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), pos);
                }
                Tok::Int(_) | Tok::Letter(_) | Tok::Name(_) | Tok::LParen => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, InputError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let atom_pos = self.pos();
        let atom = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(atom);
        }
        self.bump();
        let exp_pos = self.pos();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let n = match self.bump() {
            (_, Tok::Int(n)) => n,
            _ => return Err(InputError::NonIntegerExponent { pos: exp_pos }),
        };
        // a decimal point would make it non-integer
        if *self.peek() == Tok::Other('.') {
            return Err(InputError::NonIntegerExponent { pos: exp_pos });
        }
        let n: i64 = i64::try_from(n).map_err(|_| InputError::Syntax {
            pos: exp_pos,
            msg: "exponent out of range".into(),
        })?;
        let n = if negative { -n } else { n };
        if n < 0 && matches!(atom, Expr::Gen('d') | Expr::Gen('u')) {
            return Err(InputError::NegativePowerOfDU { pos: atom_pos });
        }
        Ok(Expr::Pow(Box::new(atom), n, atom_pos))
    }

    fn atom(&mut self) -> Result<Expr, InputError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Letter(c) => {
                let (pos, _) = self.bump();
                Ok(match c {
                    'r' => Expr::Param(Param::R, pos),
                    's' => Expr::Param(Param::S, pos),
                    'q' => Expr::Param(Param::Q, pos),
                    g => Expr::Gen(g),
                })
            }
            Tok::Name(n) => {
                let (pos, _) = self.bump();
                Ok(Expr::Name(n, pos))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Letter(c) => format!("'{c}'"),
        Tok::Name(n) => format!("name '{n}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Other(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

/// Parses with a predicate telling which identifiers are bound names.
pub fn parse_with(text: &str, names: &dyn Fn(&str) -> bool) -> Result<Expr, InputError> {
    let toks = tokenize(text, names)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(e)
}

pub fn parse(text: &str) -> Result<Expr, InputError> {
    parse_with(text, &|_| false)
}

/// Evaluation context: the algebra and any `let` bindings.
pub struct Session {
    alg: DownUp,
    bindings: HashMap<String, Element>,
}

impl Session {
    pub fn new(case: Case) -> Session {
        Session {
            alg: DownUp::new(case),
            bindings: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &DownUp {
        &self.alg
    }

    pub fn case(&self) -> Case {
        self.alg.case()
    }

    pub fn bind(&mut self, name: &str, value: Element) {
        self.bindings.insert(name.to_string(), value);
    }

    pub fn binding(&self, name: &str) -> Option<&Element> {
        self.bindings.get(name)
    }

    pub fn parse(&self, text: &str) -> Result<Expr, InputError> {
        parse_with(text, &|w| self.bindings.contains_key(w))
    }

    pub fn eval_str(&self, text: &str) -> Result<Element, InputError> {
        self.eval(&self.parse(text)?)
    }

    pub fn eval(&self, e: &Expr) -> Result<Element, InputError> {
        let alg = &self.alg;
        Ok(match e {
            Expr::Int(n) => Element::scalar(Scalar::from_bigint(n.clone())),
            Expr::Param(p, pos) => match self.case().param(*p) {
                Some(v) => Element::scalar(v),
                None => {
                    return Err(InputError::Eval {
                        pos: *pos,
                        msg: "q is only defined when r = q and s = 1/q (case 2)".into(),
                    })
                }
            },
            Expr::Gen(g) => match g {
                'd' => Element::d(),
                'u' => Element::u(),
                'x' => Element::x(),
                'y' => Element::y(),
                _ => Element::word(BasisWord::laurent(1, 1)),
            },
            Expr::Name(n, pos) => {
                self.bindings
                    .get(n)
                    .cloned()
                    .ok_or_else(|| InputError::Eval {
                        pos: *pos,
                        msg: format!("unbound name '{n}'"),
                    })?
            }
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => alg.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Neg(a) => -self.eval(a)?,
            Expr::Div(a, b, pos) => {
                let num = self.eval(a)?;
                let den = self.eval(b)?.as_scalar().ok_or_else(|| InputError::Eval {
                    pos: *pos,
                    msg: "division is only by scalars".into(),
                })?;
                let inv = den.inv().map_err(|_| InputError::Eval {
                    pos: *pos,
                    msg: "division by zero".into(),
                })?;
                num.scale(&inv)
            }
            Expr::Pow(a, n, pos) => {
                let base = self.eval(a)?;
                if *n >= 0 {
                    alg.pow(&base, *n as u32)
                } else {
                    if base.terms().any(|(w, _)| w.m != 0) {
                        return Err(InputError::NegativePowerOfDU { pos: *pos });
                    }
                    alg.pow_signed(&base, *n).ok_or_else(|| InputError::Eval {
                        pos: *pos,
                        msg: format!("{base} is not invertible"),
                    })?
                }
            }
        })
    }
}
