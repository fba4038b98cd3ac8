use std::fmt;

use num_rational::BigRational;

use crate::display;

/// One exact identity evaluated on both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub params: String,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentityCheck {
    pub fn new(
        identity: &'static str,
        params: impl Into<String>,
        lhs: BigRational,
        rhs: BigRational,
    ) -> Self {
        IdentityCheck {
            identity,
            params: params.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} {} {}",
            if self.holds() { "PASS" } else { "FAIL" },
            self.identity,
            self.params,
            display::exact(&self.lhs),
            if self.holds() { "=" } else { "!=" },
            display::exact(&self.rhs),
        )
    }
}
