"""
Test package for vertex-forms.

This package contains unit tests for the exact linear algebra, the models,
the invariant forms and the command-line front end.
"""
