pub mod sset;
