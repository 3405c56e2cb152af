pub mod census;
pub mod enumerate;
pub mod verify;

pub use census::{census, census_records, CensusRecord, Flags};
pub use enumerate::{all_bouquets, all_bouquets_with, random_bouquet, Dedup};
pub use verify::{verify, verify_with, Theorem, VerificationReport, VerifyOptions};
