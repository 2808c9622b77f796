//! Process exit codes.
//!
//! - `0`: no error-severity diagnostics
//! - `1`: at least one error-severity diagnostic
//! - `2`: usage, config or I/O failure

use dilint_core::Severity;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: i32,
}

impl ExitStatus {
    pub const CLEAN: ExitStatus = ExitStatus { code: 0 };
    pub const FINDINGS: ExitStatus = ExitStatus { code: 1 };
    pub const FAILURE: ExitStatus = ExitStatus { code: 2 };

    pub fn from_max_severity(max: Option<Severity>) -> Self {
        match max {
            Some(Severity::Error) => ExitStatus::FINDINGS,
            _ => ExitStatus::CLEAN,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_max_severity() {
        assert_eq!(ExitStatus::from_max_severity(None), ExitStatus::CLEAN);
        assert_eq!(
            ExitStatus::from_max_severity(Some(Severity::Info)),
            ExitStatus::CLEAN
        );
        assert_eq!(
            ExitStatus::from_max_severity(Some(Severity::Warning)),
            ExitStatus::CLEAN
        );
        assert_eq!(
            ExitStatus::from_max_severity(Some(Severity::Error)),
            ExitStatus::FINDINGS
        );
    }
}
