"""Domain layer: immutable value types and enumerations."""
