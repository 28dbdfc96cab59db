//! Deterministic simulator and analysis toolkit for BlockRoam, a
//! proof-of-stake blockchain for inter-operator mobile roaming.
//!
//! The crate is organized around five subsystems:
//!
//! * [`ledger`] — hash-linked blocks and transactions, balance tracking,
//!   validation against a leader schedule, and longest-valid-fork resolution.
//! * [`consensus`] — epoch/slot scheduling, commit-reveal seed generation,
//!   stake-weighted follow-the-satoshi election, rewards, deposits, slashing.
//! * [`security`] — analytic common-prefix bounds, confirmation-time tables,
//!   Monte Carlo verification, and scripted attack scenarios.
//! * [`roaming`] — the smart-contract escrow workflow for roaming sessions:
//!   pact deployment, deposit, CDR-triggered settlement, refund.
//! * [`game`] — exact Stackelberg equilibrium computation for the stake-pool
//!   pricing game, with independent brute-force and subset-LP oracles.
//!
//! Every simulation is a pure function of its inputs and an explicit seed;
//! nothing reads the wall clock or ambient entropy.

pub mod consensus;
pub mod game;
pub mod ledger;
pub mod rng;
pub mod roaming;
pub mod security;

pub use ledger::{AccountId, Block, Chain, Digest, TokenAmount, Transaction, TxId, TxKind};
