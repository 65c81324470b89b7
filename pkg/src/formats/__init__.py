"""
Text formats for roundsim: automata files, bundles and reports
"""
