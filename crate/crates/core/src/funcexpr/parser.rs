use super::lexer::{tokenize, Token, TokenKind};
use super::{BinOp, Expr, ExprError, Func, Var};

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    parse_tokens(&tokenize(text)?)
}

pub fn parse_tokens(tokens: &[Token]) -> Result<Expr, ExprError> {
    if tokens.is_empty() {
        return Err(ExprError::Empty);
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        var: None,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(match t.kind {
            TokenKind::RParen => ExprError::Unbalanced { offset: t.offset },
            _ => ExprError::Unexpected {
                found: t.lexeme.clone(),
                offset: t.offset,
            },
        });
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    var: Option<Var>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<&Token, ExprError> {
        let t = self.tokens.get(self.pos).ok_or(ExprError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn eat_op(&mut self, ops: &[char]) -> Option<char> {
        match self.peek()?.kind {
            TokenKind::Op(c) if ops.contains(&c) => {
                self.pos += 1;
                Some(c)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(c) = self.eat_op(&['+', '-']) {
            let op = if c == '+' { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::binary(op, lhs, self.term()?);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(c) = self.eat_op(&['*', '/']) {
            let op = if c == '*' { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::binary(op, lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat_op(&['-']).is_some() {
            return Ok(Expr::negate(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        if self.eat_op(&['^']).is_some() {
            return Ok(Expr::binary(BinOp::Pow, base, self.unary()?));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let t = self.next()?.clone();
        match t.kind {
            TokenKind::Number => Ok(Expr::Const(t.lexeme.parse().expect("lexer validated number"))),
            TokenKind::LParen => {
                let e = self.expr()?;
                self.close(t.offset)?;
                Ok(e)
            }
            TokenKind::Ident => self.ident(&t),
            TokenKind::RParen => Err(ExprError::Unbalanced { offset: t.offset }),
            _ => Err(ExprError::Unexpected {
                found: t.lexeme,
                offset: t.offset,
            }),
        }
    }

    fn close(&mut self, open_offset: usize) -> Result<(), ExprError> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::RParen => {
                self.pos += 1;
                Ok(())
            }
            Some(t) if t.kind == TokenKind::Comma => Err(ExprError::Unexpected {
                found: ",".into(),
                offset: t.offset,
            }),
            _ => Err(ExprError::Unbalanced { offset: open_offset }),
        }
    }

    fn ident(&mut self, t: &Token) -> Result<Expr, ExprError> {
        let called = self.peek().is_some_and(|n| n.kind == TokenKind::LParen);
        if called {
            let f = Func::from_name(&t.lexeme).ok_or_else(|| ExprError::UnknownFunction {
                name: t.lexeme.clone(),
                offset: t.offset,
            })?;
            let open = self.next()?.offset;
            let arg = self.expr()?;
            if self.peek().is_some_and(|n| n.kind == TokenKind::Comma) {
                return Err(ExprError::Arity { name: t.lexeme.clone() });
            }
            self.close(open)?;
            return Ok(Expr::call(f, arg));
        }
        let var = match t.lexeme.as_str() {
            "x" => Var::X,
            "r" => Var::R,
            "pi" => return Ok(Expr::Const(std::f64::consts::PI)),
            "e" => return Ok(Expr::Const(std::f64::consts::E)),
            name if Func::from_name(name).is_some() => {
                return Err(ExprError::Unexpected {
                    found: name.into(),
                    offset: t.offset,
                })
            }
            name => {
                return Err(ExprError::UnknownIdentifier {
                    name: name.into(),
                    offset: t.offset,
                })
            }
        };
        match self.var {
            Some(v) if v != var => Err(ExprError::TwoVariables(v.name(), var.name())),
            _ => {
                self.var = Some(var);
                Ok(Expr::Var(var))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse("2^3^2").unwrap().eval(0.0), Some(512.0));
        assert_eq!(parse("-x^2").unwrap().eval(2.0), Some(-4.0));
        assert_eq!(parse("(-x)^2").unwrap().eval(2.0), Some(4.0));
        assert_eq!(parse("1-2-3").unwrap().eval(0.0), Some(-4.0));
        assert_eq!(parse("8/4/2").unwrap().eval(0.0), Some(1.0));
        assert_eq!(parse("2*3+4*5").unwrap().eval(0.0), Some(26.0));
        assert_eq!(parse("2^-1").unwrap().eval(0.0), Some(0.5));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("foo(x)"), Err(ExprError::UnknownFunction { .. })));
        assert!(matches!(parse("y+1"), Err(ExprError::UnknownIdentifier { .. })));
        assert_eq!(parse(""), Err(ExprError::Empty));
        assert_eq!(parse("  "), Err(ExprError::Empty));
        assert!(matches!(parse("(x+1"), Err(ExprError::Unbalanced { offset: 0 })));
        assert!(matches!(parse("x+1)"), Err(ExprError::Unbalanced { offset: 3 })));
        assert_eq!(parse("x+r"), Err(ExprError::TwoVariables('x', 'r')));
        assert!(matches!(parse("2x"), Err(ExprError::Unexpected { .. })));
        assert!(matches!(parse("mod(x, 2)"), Err(ExprError::Arity { .. })));
        assert!(matches!(parse("sin"), Err(ExprError::Unexpected { .. })));
        assert_eq!(parse("x+"), Err(ExprError::UnexpectedEnd));
    }

    #[test]
    fn constants_are_allowed() {
        assert_eq!(parse("2*pi").unwrap().eval(0.0), Some(std::f64::consts::TAU));
        assert_eq!(parse("3").unwrap().variable(), None);
    }
}
