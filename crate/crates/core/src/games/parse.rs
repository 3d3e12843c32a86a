//! Text form of games.
//!
//! ```text
//! expr     := term ( '|' term )*
//! term     := factor ( '&' factor )*
//! factor   := weighted | '(' expr ')'
//! weighted := '[' rational ';' rational ( ',' rational )* ']'
//! ```
//!
//! plus the explicit literals `n=4; minwin={1,2},{3,4}` and
//! `n=7; shiftminwin={3,4,5,6,7},{2,3,5,6},{1,3,7}`. Whitespace is ignored.

use crate::coalition::{Coalition, MAX_VOTERS};
use crate::error::{Error, Result};
use crate::games::combo::{BoolCombo, ComboExpr};
use crate::games::complete::CompleteGame;
use crate::games::explicit::ExplicitGame;
use crate::games::weighted::WeightedGame;
use crate::games::Game;
use crate::number::parse_rational;

pub fn parse_game(text: &str) -> Result<Game> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    let game = if p.peek() == Some('n') {
        p.explicit()?
    } else {
        let expr = p.expr()?;
        match expr {
            ComboExpr::Leaf(w) => Game::Weighted(w),
            other => Game::Combo(BoolCombo::new(other)?),
        }
    };
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(game)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<ComboExpr> {
        let mut terms = vec![self.term()?];
        while self.eat('|') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            ComboExpr::Or(terms)
        })
    }

    fn term(&mut self) -> Result<ComboExpr> {
        let mut factors = vec![self.factor()?];
        while self.eat('&') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            ComboExpr::And(factors)
        })
    }

    fn factor(&mut self) -> Result<ComboExpr> {
        self.skip_ws();
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            Ok(e)
        } else if self.peek() == Some('[') {
            self.weighted()
        } else {
            Err(self.error("expected '[' or '('"))
        }
    }

    fn number_token(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !(c.is_ascii_digit() || ".+-/".contains(c) || c.is_whitespace()) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn rational(&mut self) -> Result<crate::number::Rational> {
        let start = self.pos;
        let tok: String = self
            .number_token()
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        parse_rational(&tok).ok_or(Error::Syntax {
            pos: start,
            msg: format!("invalid number '{tok}'"),
        })
    }

    fn weighted(&mut self) -> Result<ComboExpr> {
        let start = self.pos;
        self.expect('[')?;
        let quota = self.rational()?;
        self.expect(';')?;
        let mut weights = vec![self.rational()?];
        while self.eat(',') {
            weights.push(self.rational()?);
        }
        self.expect(']')?;
        let w = WeightedGame::new(quota, weights).map_err(|e| match e {
            Error::InvalidWeights(m) => Error::Syntax { pos: start, msg: m },
            other => other,
        })?;
        Ok(ComboExpr::Leaf(w))
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "expected an integer".into(),
            })
    }

    fn keyword(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn explicit(&mut self) -> Result<Game> {
        if self.keyword() != "n" {
            return Err(self.error("expected 'n='"));
        }
        self.expect('=')?;
        let n = self.integer()?;
        if n == 0 || n > MAX_VOTERS {
            return Err(Error::VoterCount {
                n,
                min: 1,
                max: MAX_VOTERS,
            });
        }
        self.expect(';')?;
        let kw_pos = self.pos;
        let kw = self.keyword();
        self.expect('=')?;
        let mut list = vec![self.coalition(n)?];
        while self.eat(',') {
            list.push(self.coalition(n)?);
        }
        match kw.as_str() {
            "minwin" => {
                for (a, s) in list.iter().enumerate() {
                    if list
                        .iter()
                        .enumerate()
                        .any(|(b, t)| a != b && t.is_subset(*s))
                    {
                        return Err(Error::NotSimple(format!("{s} is not minimal")));
                    }
                }
                Ok(Game::Explicit(ExplicitGame::from_minimal_winning(
                    n, &list,
                )?))
            }
            "shiftminwin" => Ok(Game::Complete(CompleteGame::new(n, list)?)),
            _ => Err(Error::Syntax {
                pos: kw_pos,
                msg: "expected 'minwin' or 'shiftminwin'".into(),
            }),
        }
    }

    fn coalition(&mut self, n: usize) -> Result<Coalition> {
        self.expect('{')?;
        let mut s = Coalition::EMPTY;
        if self.eat('}') {
            return Ok(s);
        }
        loop {
            let pos = self.pos;
            let v = self.integer()?;
            if v == 0 || v > n {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("voter {v} outside 1..={n}"),
                });
            }
            s = s.with(v - 1);
            if !self.eat(',') {
                break;
            }
        }
        self.expect('}')?;
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_weighted_literal() {
        match parse_game("[3;3,2,1,1]").unwrap() {
            Game::Weighted(w) => {
                assert_eq!(w.integer_weights(), &[3, 2, 1, 1]);
                assert_eq!(w.integer_quota(), 3);
            }
            g => panic!("unexpected {g:?}"),
        }
    }

    #[test]
    fn parses_combinations_with_precedence() {
        let g = parse_game(" [2;2,0,1,1] & [2;0,2,1,1] ").unwrap();
        assert!(
            matches!(&g, Game::Combo(c) if matches!(c.root(), ComboExpr::And(x) if x.len() == 2))
        );
        let g = parse_game("[1;1,0,0] | [1;0,1,0] & [1;0,0,1]").unwrap();
        let Game::Combo(c) = g else { panic!() };
        assert!(matches!(c.root(), ComboExpr::Or(x) if matches!(x[1], ComboExpr::And(_))));
        let g = parse_game("([1;1,0,0] | [1;0,1,0]) & [1;0,0,1]").unwrap();
        let Game::Combo(c) = g else { panic!() };
        assert!(matches!(c.root(), ComboExpr::And(_)));
    }

    #[test]
    fn parses_decimals_and_fractions_exactly() {
        let Game::Weighted(w) = parse_game("[0.65; 1/2, 0.25, 1 / 4]").unwrap() else {
            panic!()
        };
        assert_eq!(w.to_string(), "[13/20;1/2,1/4,1/4]");
    }

    #[test]
    fn parses_explicit_literals() {
        let g = parse_game("n=4; minwin={1,2},{3,4}").unwrap();
        assert!(matches!(g, Game::Explicit(_)));
        let g = parse_game("n=7; shiftminwin={3,4,5,6,7},{2,3,5,6},{1,3,7}").unwrap();
        let Game::Complete(c) = g else { panic!() };
        assert_eq!(c.shift_minimal_winning().len(), 3);
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(parse_game("[0;1,1]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_game("[3;1,1]"), Err(Error::NotSimple(_))));
        assert!(matches!(
            parse_game("[1;1,0] & [1;1,0,0]"),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            parse_game("[1;1,1"),
            Err(Error::Syntax { pos: 6, .. })
        ));
        assert!(matches!(
            parse_game("[1;1,1] junk"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_game("n=3; minwin={1,4}"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_game("n=3; foo={1}"),
            Err(Error::Syntax { .. })
        ));
        assert!(parse_game("n=3; minwin={1},{1,2}").is_err());
        assert!(parse_game("n=3; minwin={}").is_err());
    }
}
