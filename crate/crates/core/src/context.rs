use core::sync::atomic::{AtomicBool, Ordering};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Seed and cancellation flag threaded through long computations.
///
/// All randomised steps draw from generators derived from `seed`, so a run
/// is reproducible given its seed. Setting the stop flag makes the next
/// [`Context::check`] return [`Error::Cancelled`].
#[derive(Clone, Copy, Default)]
pub struct Context<'a> {
    pub seed: u64,
    stop: Option<&'a AtomicBool>,
}

impl<'a> Context<'a> {
    pub fn new(seed: u64) -> Self {
        Context { seed, stop: None }
    }

    pub fn with_stop(seed: u64, stop: &'a AtomicBool) -> Self {
        Context { seed, stop: Some(stop) }
    }

    /// A generator for one sub-task. Different salts give independent streams.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(salt);
        rng
    }

    pub fn check(&self) -> Result<()> {
        match self.stop {
            Some(flag) if flag.load(Ordering::Relaxed) => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}
