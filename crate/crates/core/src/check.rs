//! Placeholder; the verification checks land here.
