//! Interpreter for user-typed formulas: `sin(x)+x/2`, `2^x`, `{cos(r), sin(r)}`.
//!
//! Precedence from loosest to tightest: `+ -`, `* /`, unary minus, `^`
//! (right-associative). Calls take exactly one argument. One free variable
//! per formula, either `x` or `r`.

mod eval;
mod lexer;
mod parser;
mod print;

pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_tokens};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("unexpected character `{ch}` at offset {offset}")]
    Lex { offset: usize, ch: char },
    #[error("empty expression")]
    Empty,
    #[error("unknown function `{name}` at offset {offset}")]
    UnknownFunction { name: String, offset: usize },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },
    #[error("unbalanced parenthesis at offset {offset}")]
    Unbalanced { offset: usize },
    #[error("unexpected `{found}` at offset {offset}")]
    Unexpected { found: String, offset: usize },
    #[error("expression ends too early")]
    UnexpectedEnd,
    #[error("`{name}` takes exactly one argument")]
    Arity { name: String },
    #[error("expression uses both `{0}` and `{1}`; only one variable is allowed")]
    TwoVariables(char, char),
    #[error("expected variable `{expected}` but found `{found}`")]
    WrongVariable { expected: char, found: char },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    R,
}

impl Var {
    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::R => 'r',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tg,
    Sh,
    Ch,
    Th,
    Ln,
    Lg,
    Exp,
    Sqrt,
    Mod,
    Arcsin,
    Arccos,
    Arctg,
}

impl Func {
    pub const ALL: [Func; 14] = [
        Func::Sin,
        Func::Cos,
        Func::Tg,
        Func::Sh,
        Func::Ch,
        Func::Th,
        Func::Ln,
        Func::Lg,
        Func::Exp,
        Func::Sqrt,
        Func::Mod,
        Func::Arcsin,
        Func::Arccos,
        Func::Arctg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tg => "tg",
            Func::Sh => "sh",
            Func::Ch => "ch",
            Func::Th => "th",
            Func::Ln => "ln",
            Func::Lg => "lg",
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
            Func::Mod => "mod",
            Func::Arcsin => "arcsin",
            Func::Arccos => "arccos",
            Func::Arctg => "arctg",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var(Var),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn binary(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn negate(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    pub fn call(f: Func, e: Expr) -> Expr {
        Expr::Call(f, Box::new(e))
    }

    /// The free variable, if any.
    pub fn variable(&self) -> Option<Var> {
        match self {
            Expr::Const(_) => None,
            Expr::Var(v) => Some(*v),
            Expr::Neg(e) | Expr::Call(_, e) => e.variable(),
            Expr::Binary(_, a, b) => a.variable().or_else(|| b.variable()),
        }
    }

    pub fn eval(&self, value: f64) -> Option<f64> {
        eval::eval(self, value)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::print(self))
    }
}

/// What a plotting area draws: `y(x)` or the parametric pair `{x(r), y(r)}`.
/// Formula texts are kept verbatim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "camelCase")]
pub enum CurveSpec {
    #[serde(rename_all = "camelCase")]
    YOfX { y: String },
    #[serde(rename_all = "camelCase")]
    Parametric { x: String, y: String, r_range: (f64, f64) },
}

/// A parsed [`CurveSpec`].
#[derive(Debug, Clone, PartialEq)]
pub enum Compiled {
    YOfX(Expr),
    Parametric { x: Expr, y: Expr, r_range: (f64, f64) },
}

impl CurveSpec {
    pub fn y_of_x(text: impl Into<String>) -> Self {
        CurveSpec::YOfX { y: text.into() }
    }

    pub fn compile(&self) -> Result<Compiled, ExprError> {
        let expect = |text: &str, want: Var| -> Result<Expr, ExprError> {
            let e = parse(text)?;
            match e.variable() {
                Some(v) if v != want => Err(ExprError::WrongVariable {
                    expected: want.name(),
                    found: v.name(),
                }),
                _ => Ok(e),
            }
        };
        match self {
            CurveSpec::YOfX { y } => Ok(Compiled::YOfX(expect(y, Var::X)?)),
            CurveSpec::Parametric { x, y, r_range } => Ok(Compiled::Parametric {
                x: expect(x, Var::R)?,
                y: expect(y, Var::R)?,
                r_range: *r_range,
            }),
        }
    }

    /// Short label for legends: `y = ...` or `{x(r), y(r)}`.
    pub fn label(&self) -> String {
        match self {
            CurveSpec::YOfX { y } => format!("y = {y}"),
            CurveSpec::Parametric { x, y, .. } => format!("{{{x}, {y}}}"),
        }
    }
}
