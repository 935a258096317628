"""
Exact arithmetic for expansions in non-integer bases over the digits 0..M.
"""
