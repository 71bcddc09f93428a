// placeholder, replaced before completion
