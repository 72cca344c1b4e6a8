use super::RingError;

/// One signed monomial `coeff * var^exp`; constants have `exp == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Term {
    pub coeff: i64,
    pub exp: i64,
}

fn syntax(pos: usize, msg: impl Into<String>) -> RingError {
    RingError::Syntax {
        pos,
        msg: msg.into(),
    }
}

/// Parses a sum of terms such as `1+t+t^2`, `-A^2-A^-2` or `3`.
///
/// `var` is the permitted variable symbol (`None` for plain integers).
pub(crate) fn parse_terms(text: &str, var: Option<char>) -> Result<Vec<Term>, RingError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(syntax(0, "empty element"));
    }
    let mut terms = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        match chars[i].1 {
            '+' if i > 0 => i += 1,
            '-' => {
                sign = -1;
                i += 1;
            }
            _ if i > 0 => return Err(syntax(chars[i].0, "expected `+` or `-`")),
            _ => {}
        }
        let start = chars.get(i).map_or(text.len(), |c| c.0);
        let (coeff, next) = read_uint(&chars, i)?;
        i = next;
        let has_var = match (chars.get(i), var) {
            (Some(&(_, c)), Some(v)) if c == v => {
                i += 1;
                true
            }
            (Some(&(p, c)), _) if c.is_alphabetic() => {
                return Err(syntax(p, format!("unexpected symbol `{c}`")));
            }
            _ => false,
        };
        if coeff.is_none() && !has_var {
            return Err(syntax(start, "expected a coefficient or monomial"));
        }
        let mut exp = if has_var { 1 } else { 0 };
        if has_var && chars.get(i).map(|c| c.1) == Some('^') {
            i += 1;
            let neg = chars.get(i).map(|c| c.1) == Some('-');
            if neg {
                i += 1;
            }
            let pos = chars.get(i).map_or(text.len(), |c| c.0);
            let (e, next) = read_uint(&chars, i)?;
            let e = e.ok_or_else(|| syntax(pos, "expected exponent"))?;
            i = next;
            exp = if neg { -e } else { e };
        }
        let coeff = coeff
            .unwrap_or(1)
            .checked_mul(sign)
            .ok_or_else(|| syntax(start, "coefficient overflow"))?;
        terms.push(Term { coeff, exp });
    }
    Ok(terms)
}

fn read_uint(chars: &[(usize, char)], mut i: usize) -> Result<(Option<i64>, usize), RingError> {
    let start = i;
    let mut v: i64 = 0;
    while let Some(&(p, c)) = chars.get(i) {
        let Some(d) = c.to_digit(10) else { break };
        if i > start && p != chars[i - 1].0 + 1 {
            break;
        }
        v = v
            .checked_mul(10)
            .and_then(|v| v.checked_add(d as i64))
            .ok_or_else(|| syntax(p, "integer overflow"))?;
        i += 1;
    }
    Ok(((i > start).then_some(v), i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(coeff: i64, exp: i64) -> Term {
        Term { coeff, exp }
    }

    #[test]
    fn terms() {
        assert_eq!(
            parse_terms("1+t+t^2", Some('t')).unwrap(),
            vec![t(1, 0), t(1, 1), t(1, 2)]
        );
        assert_eq!(
            parse_terms("-A^2-A^-2", Some('A')).unwrap(),
            vec![t(-1, 2), t(-1, -2)]
        );
        assert_eq!(
            parse_terms(" 3t^2 - 4 ", Some('t')).unwrap(),
            vec![t(3, 2), t(-4, 0)]
        );
        assert_eq!(parse_terms("-7", None).unwrap(), vec![t(-7, 0)]);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_terms("", None), Err(syntax(0, "empty element")));
        assert!(matches!(
            parse_terms("1+", Some('t')),
            Err(RingError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_terms("t", None),
            Err(RingError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_terms("2 3", None),
            Err(RingError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_terms("t^", Some('t')),
            Err(RingError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_terms("tt", Some('t')),
            Err(RingError::Syntax { pos: 1, .. })
        ));
    }
}
