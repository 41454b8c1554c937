use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Instant;

use crate::error::{Error, Result};

/// Cooperative cancellation for long computations: an interrupt flag and an
/// optional wall-clock deadline, polled between units of work.
#[derive(Clone, Debug, Default)]
pub struct Control {
    interrupt: Option<Arc<AtomicBool>>,
    deadline: Option<Instant>,
}

impl Control {
    /// Never cancels.
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_interrupt(mut self, flag: Arc<AtomicBool>) -> Self {
        self.interrupt = Some(flag);
        self
    }

    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    pub fn check(&self) -> Result<()> {
        if let Some(flag) = &self.interrupt {
            if flag.load(Ordering::Relaxed) {
                return Err(Error::Interrupted);
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return Err(Error::Budget("wall-clock limit reached".into()));
            }
        }
        Ok(())
    }
}
