"""Constructors for the example categories and their endofunctors."""
