# Infraestructura compartida: configuración, excepciones, contenedor
