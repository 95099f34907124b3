use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Variable reference; indices are zero-based (the source `x1` is `State(0)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    State(usize),
    Input(usize),
    Output(usize),
    Time,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tanh,
    Exp,
    Sqrt,
    Abs,
}

impl Func {
    const ALL: [Func; 6] = [Func::Sin, Func::Cos, Func::Tanh, Func::Exp, Func::Sqrt, Func::Abs];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tanh => "tanh",
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Tanh => v.tanh(),
            Func::Exp => v.exp(),
            Func::Sqrt => v.sqrt(),
            Func::Abs => v.abs(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Declared variable ranges: x1..xn, u1..um, y1..yp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Scope {
    pub states: usize,
    pub inputs: usize,
    pub outputs: usize,
}

impl Scope {
    pub fn new(states: usize, inputs: usize, outputs: usize) -> Self {
        Self { states, inputs, outputs }
    }
}

/// Variable values for evaluation. Missing entries evaluate as NaN.
#[derive(Debug, Clone, Copy, Default)]
pub struct Env<'a> {
    pub x: &'a [f64],
    pub u: &'a [f64],
    pub y: &'a [f64],
    pub t: f64,
}

impl<'a> Env<'a> {
    pub fn new(x: &'a [f64], u: &'a [f64], t: f64) -> Self {
        Self { x, u, y: &[], t }
    }

    pub fn with_outputs(mut self, y: &'a [f64]) -> Self {
        self.y = y;
        self
    }
}

/// Variables an expression mentions, zero-based.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dependencies {
    pub states: BTreeSet<usize>,
    pub inputs: BTreeSet<usize>,
    pub outputs: BTreeSet<usize>,
    pub time: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical(char),
    BadNumber(String),
    Syntax(String),
    UnknownFunction(String),
    UnknownVariable(String),
    IndexOutOfRange { name: String, declared: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {}", describe(.kind))]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::Lexical(c) => format!("unexpected character '{c}'"),
        ParseErrorKind::BadNumber(s) => format!("invalid number '{s}'"),
        ParseErrorKind::Syntax(s) => s.clone(),
        ParseErrorKind::UnknownFunction(s) => format!("unknown function '{s}'"),
        ParseErrorKind::UnknownVariable(s) => format!("unknown variable '{s}'"),
        ParseErrorKind::IndexOutOfRange { name, declared } => {
            format!("variable '{name}' out of range ({declared} declared)")
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            match text.parse::<f64>() {
                Ok(v) if v.is_finite() => Tok::Num(v),
                _ => {
                    return Err(ParseError {
                        line: l0,
                        col: c0,
                        kind: ParseErrorKind::BadNumber(text),
                    })
                }
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' | '-' | '*' | '/' | '^' => Tok::Op(c),
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(ParseError {
                        line: l0,
                        col: c0,
                        kind: ParseErrorKind::Lexical(c),
                    })
                }
            }
        };
        col += i - start;
        out.push(Token { tok, line: l0, col: c0 });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser<'s> {
    toks: Vec<Token>,
    pos: usize,
    scope: &'s Scope,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(tok: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: tok.line,
            col: tok.col,
            kind,
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let tok = self.peek();
        let found = match &tok.tok {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Op(c) => format!("'{c}'"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        };
        Self::error_at(tok, ParseErrorKind::Syntax(format!("expected {wanted}, found {found}")))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Op('+') => BinOp::Add,
                Tok::Op('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().tok {
                Tok::Op('*') => BinOp::Mul,
                Tok::Op('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Op('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.peek().tok == Tok::Op('^') {
            self.bump();
            // the exponent may itself be signed or a power: right associative
            let exp = self.unary()?;
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let tok = self.peek().clone();
        match tok.tok {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Num(v))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect_rparen()?;
                Ok(e)
            }
            Tok::Ident(ref name) => {
                self.bump();
                if self.peek().tok == Tok::LParen {
                    let func = Func::ALL
                        .into_iter()
                        .find(|f| f.name() == name)
                        .ok_or_else(|| Self::error_at(&tok, ParseErrorKind::UnknownFunction(name.clone())))?;
                    self.bump();
                    let arg = self.expr()?;
                    self.expect_rparen()?;
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                self.variable(&tok, name).map(Expr::Var)
            }
            _ => Err(self.unexpected("a number, variable, function or '('")),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected("')'"))
        }
    }

    fn variable(&self, tok: &Token, name: &str) -> Result<Var, ParseError> {
        if name == "t" {
            return Ok(Var::Time);
        }
        let unknown = || Self::error_at(tok, ParseErrorKind::UnknownVariable(name.to_string()));
        let (kind, digits) = name.split_at(1);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(unknown());
        }
        let index: usize = digits.parse().map_err(|_| unknown())?;
        let (declared, var): (usize, fn(usize) -> Var) = match kind {
            "x" => (self.scope.states, Var::State),
            "u" => (self.scope.inputs, Var::Input),
            "y" => (self.scope.outputs, Var::Output),
            _ => return Err(unknown()),
        };
        if index > declared {
            return Err(Self::error_at(
                tok,
                ParseErrorKind::IndexOutOfRange {
                    name: name.to_string(),
                    declared,
                },
            ));
        }
        Ok(var(index - 1))
    }
}

/// Parses one expression over the variables declared in `scope`.
pub fn parse(src: &str, scope: &Scope) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, scope };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

impl Expr {
    /// IEEE evaluation; domain errors give NaN, which propagates.
    pub fn eval(&self, env: &Env) -> f64 {
        match self {
            Expr::Num(v) => *v,
            Expr::Var(Var::State(i)) => env.x.get(*i).copied().unwrap_or(f64::NAN),
            Expr::Var(Var::Input(i)) => env.u.get(*i).copied().unwrap_or(f64::NAN),
            Expr::Var(Var::Output(i)) => env.y.get(*i).copied().unwrap_or(f64::NAN),
            Expr::Var(Var::Time) => env.t,
            Expr::Neg(e) => -e.eval(env),
            Expr::Binary(op, l, r) => {
                let (a, b) = (l.eval(env), r.eval(env));
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a / b,
                    BinOp::Pow => pow(a, b),
                }
            }
            Expr::Call(f, e) => f.apply(e.eval(env)),
        }
    }

    pub fn dependencies(&self) -> Dependencies {
        let mut deps = Dependencies::default();
        self.collect(&mut deps);
        deps
    }

    fn collect(&self, deps: &mut Dependencies) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(Var::State(i)) => {
                deps.states.insert(*i);
            }
            Expr::Var(Var::Input(i)) => {
                deps.inputs.insert(*i);
            }
            Expr::Var(Var::Output(i)) => {
                deps.outputs.insert(*i);
            }
            Expr::Var(Var::Time) => deps.time = true,
            Expr::Neg(e) | Expr::Call(_, e) => e.collect(deps),
            Expr::Binary(_, l, r) => {
                l.collect(deps);
                r.collect(deps);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Binary(BinOp::Pow, ..) => 4,
            Expr::Num(v) if *v < 0.0 || (*v == 0.0 && v.is_sign_negative()) => 3,
            _ => 5,
        }
    }
}

/// Integer exponents use repeated multiplication, so x^2 of a negative
/// base stays real and exact.
fn pow(a: f64, b: f64) -> f64 {
    if b.fract() == 0.0 && b.abs() <= 64.0 {
        a.powi(b as i32)
    } else {
        a.powf(b)
    }
}

/// Sums the dependencies of several expressions.
pub fn dependencies(exprs: &[Expr]) -> Dependencies {
    let mut deps = Dependencies::default();
    for e in exprs {
        e.collect(&mut deps);
    }
    deps
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the minimal parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Var(Var::State(i)) => write!(f, "x{}", i + 1),
            Expr::Var(Var::Input(i)) => write!(f, "u{}", i + 1),
            Expr::Var(Var::Output(i)) => write!(f, "y{}", i + 1),
            Expr::Var(Var::Time) => write!(f, "t"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_child(f, e, 3)
            }
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
            Expr::Binary(op, l, r) => {
                let (sym, prec) = match op {
                    BinOp::Add => ("+", 1),
                    BinOp::Sub => ("-", 1),
                    BinOp::Mul => ("*", 2),
                    BinOp::Div => ("/", 2),
                    BinOp::Pow => ("^", 4),
                };
                if *op == BinOp::Pow {
                    write_child(f, l, 5)?;
                    write!(f, "^")?;
                    write_child(f, r, 3)
                } else {
                    write_child(f, l, prec)?;
                    write!(f, " {sym} ")?;
                    write_child(f, r, prec + 1)
                }
            }
        }
    }
}
