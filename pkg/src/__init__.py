# Paquete raíz
