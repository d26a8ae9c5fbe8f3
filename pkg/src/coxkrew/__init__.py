"""q-Catalan, q-Narayana and q-Kreweras numbers for the coincidental Coxeter groups."""
