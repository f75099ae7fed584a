"""
Test per gsp4-verify.
"""
