# Módulos del monolito: numth, curve, conic, selmer, ctp, cli, lmfdb
